#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/real.hpp"

#include <array>

namespace bwrt {

/// Normalized surgery sum
///   e^{pi i/4}/(2 sqrt(2PN)) sum_{n=0, N not| n}^{2PN-1} e^{-pi i n^2/2PN}
///     prod_j (e^{pi i n/N p_j} - e^{-pi i n/N p_j}) / (e^{pi i n/N} - e^{-pi i n/N}).
///
/// The index range is split into `workers` contiguous chunks summed
/// concurrently and combined by a fixed pairwise tree, so the result is
/// bit-identical for a given worker count. Throws std::invalid_argument for N < 2.
BigComplex rozansky_normalized(const BrieskornTriple& p, long N, const PrecisionContext& ctx, unsigned workers = 1);

/// Same sum over exponents taken in the given order (no sorting, no validation
/// beyond positivity); used to check symmetry of the summand.
BigComplex rozansky_normalized_raw(const std::array<long, 3>& exponents, long N, const PrecisionContext& ctx,
                                   unsigned workers = 1);

/// e^{2 pi i (phi/4 - 1/2)/N} (e^{2 pi i/N} - 1).
BigComplex wrt_prefactor(const BrieskornTriple& p, long N, const PrecisionContext& ctx);

struct WrtResult {
  long N = 0;
  BigComplex normalized;
  BigComplex tau;
  /// Witten invariant at level k = N - 2.
  BigComplex z_witten;
  /// 2PN - 2P.
  long term_count = 0;
  /// term_count * 2^-bits scaled by the absolute term sum.
  Real error_budget;
  unsigned workers = 1;
};

/// Throws std::invalid_argument for N < 3.
WrtResult tau_n(const BrieskornTriple& p, long N, const PrecisionContext& ctx, unsigned workers = 1);

/// tau_N from the Eichler limit instead of the surgery sum.
BigComplex tau_from_eichler(const BrieskornTriple& p, long N, const PrecisionContext& ctx);

struct SurgeryIdentityCheck {
  BigComplex lhs;
  BigComplex rhs;
  Real residual;
};

/// rozansky vs (1/2) Phi~(1/N); for (2,3,5) compares
/// e^{-pi i/60N} rozansky with 1 + (1/2) e^{-pi i/60N} Phi~(1/N).
SurgeryIdentityCheck surgery_identity_residual(const BrieskornTriple& p, long N, const PrecisionContext& ctx,
                                  unsigned workers = 1);

/// The N | k part of the surgery sum, evaluated through its Abel-regularized
/// Gauss-sum form; vanishes identically.
BigComplex excluded_subsum_regularized(const BrieskornTriple& p, long N, const PrecisionContext& ctx);

struct AsymptoticApprox {
  BigComplex dominant;
  BigComplex tail;
  BigComplex exact;
  Real abs_error;
  /// Magnitude of the order-K tail term (including the 1/2).
  Real last_tail_term;
};

/// dominant = sqrt(N/i) sum_{admissible l} S_{(1,1,1)}^{l} e^{-pi i r(l) N};
/// tail = (1/2) sum_{k<=K} L(-2k, chi^{(1,1,1)})/k! (pi i/2PN)^k, plus e^{pi i/60N} for (2,3,5).
AsymptoticApprox asymptotic_approx(const BrieskornTriple& p, long N, int K, const PrecisionContext& ctx,
                                   unsigned workers = 1);

/// Leading large-N behaviour of z_witten:
///   (1/2) e^{-3 pi i/4} e^{-pi i phi/2N} sum_{l} sqrt2 S_{(1,1,1)}^{l} e^{-pi i r(l) N}.
BigComplex witten_dominant(const BrieskornTriple& p, long N, const PrecisionContext& ctx);

}  // namespace bwrt
