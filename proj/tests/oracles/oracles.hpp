#pragma once

// Independent reference computations used only by the tests. Each one takes a
// different route from the library code it checks.

#include "bwrt/brieskorn.hpp"
#include "bwrt/rational.hpp"
#include "bwrt/real.hpp"

#include <vector>

namespace bwrt::oracle {

/// (1/4a) sum_{k=1}^{a-1} cot(k pi/a) cot(k b pi/a), a > 1, gcd(a, b) = 1.
Real dedekind_cot(long b, long a, const PrecisionContext& ctx);

/// L(-2n, chi^{(1,1,1)}) for n = 0..n_max from the Taylor coefficients of
/// 4 prod sh(x_j z)/sh(Pz), minus 2 ch(z) for (2,3,5), by exact series division.
std::vector<Rational> hyperbolic_l_values(const BrieskornTriple& p, int n_max);

/// Coefficients of z^0..z^truncation of prod(z^x - z^-x)/(z^P - z^-P) by
/// polynomial long division of z^{P - sum x} prod(z^{2x} - 1) by (z^{2P} - 1).
/// Index i holds the coefficient of z^(i + min_exponent); min_exponent is returned.
std::vector<long> long_division_series(const BrieskornTriple& p, long truncation, long& min_exponent);

/// erfc(1) = 1 - (2/sqrt pi) int_0^1 e^{-t^2} dt by Romberg extrapolation.
Real romberg_erfc_one(const PrecisionContext& ctx);

/// Normalized surgery sum through the half-range parameterization
/// k0 = a + 2Nn, 1 <= a <= N-1, 0 <= n <= P-1, doubled by k0 -> 2PN - k0.
BigComplex half_range_surgery_sum(const BrieskornTriple& p, long N, const PrecisionContext& ctx);

/// Neville extrapolation to h = 0 of samples f(h_i), assuming an expansion
/// in integer powers of h.
BigComplex extrapolate_to_zero(const std::vector<Real>& h, const std::vector<BigComplex>& f);

/// prod_{j=0}^{n-1} (x - j), exact.
Integer falling_factorial(const Integer& x, int n);

}  // namespace bwrt::oracle
