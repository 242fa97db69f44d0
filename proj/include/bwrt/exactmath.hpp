#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/rational.hpp"
#include "bwrt/real.hpp"

#include <array>
#include <vector>

namespace bwrt {

/// Integer 2x2 matrix (p r; q s) with determinant p*s - r*q = 1.
struct UnimodularMatrix {
  long p;
  long r;
  long q;
  long s;

  /// Throws std::invalid_argument unless p*s - r*q == 1.
  UnimodularMatrix(long p, long r, long q, long s);

  static UnimodularMatrix S() { return {0, -1, 1, 0}; }
  static UnimodularMatrix T() { return {1, 1, 0, 1}; }

  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
};

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// s(b, a) = sign(a) * sum_{k=1}^{|a|-1} ((k/a)) ((kb/a)), exact.
/// Throws std::invalid_argument for a == 0.
Rational dedekind_sum(long b, long a);

/// Rademacher Phi: (p+s)/q - 12 s(p,q) for q != 0, r/s otherwise.
Rational rademacher_phi(const UnimodularMatrix& u);

/// B_0..B_n.
std::vector<Rational> bernoulli_numbers(int n);
/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_polynomial(int n, const Rational& x);
/// Same, reusing a precomputed bernoulli_numbers(>= n) table.
Rational bernoulli_polynomial(int n, const Rational& x, const std::vector<Rational>& numbers);

/// Coefficients S_n^(0..n) of prod_{j=0}^{n-1} (x - j) (signed convention).
std::vector<Integer> stirling_first_row(int n);
/// S_n^(m); throws std::invalid_argument unless 0 <= m <= n.
Integer stirling_first(int n, int m);

Integer binomial(long n, long k);
Integer factorial(long n);

/// G(N) = sum_{n=0}^{2N-1} exp(-pi i n^2 / 2N).
BigComplex gauss_sum(long N, const PrecisionContext& ctx);

struct ReciprocitySides {
  BigComplex lhs;
  BigComplex rhs;
};

/// Both sides of the quadratic Gauss sum reciprocity
///   sum_{n mod N} e^{pi i M n^2/N + 2 pi i k n}
///     = sqrt|N/M| e^{pi i sign(NM)/4} sum_{n mod M} e^{-pi i N (n+k)^2/M}.
/// Requires N, M nonzero, N*M even and N*k integral.
ReciprocitySides gauss_reciprocity(long N, long M, const Rational& k, const PrecisionContext& ctx);

/// Complementary error function: power series for |x| <= 3, Laplace
/// continued fraction beyond.
Real erfc(const Real& x, const PrecisionContext& ctx);

/// Seifert invariants (q1, q2, q3) with P * sum q_k/p_k = 1,
/// normalized so 0 <= q1 < p1 and 0 <= q2 < p2.
std::array<long, 3> solve_seifert_q(const BrieskornTriple& p);

/// Modular inverse of a modulo m (m >= 1); throws if gcd(a, m) != 1.
long inverse_mod(long a, long m);

}  // namespace bwrt
