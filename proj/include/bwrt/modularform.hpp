#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/chi.hpp"
#include "bwrt/rational.hpp"
#include "bwrt/real.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace bwrt {

/// One S-matrix entry: value = sign * sqrt(32/P) * prod_j |sin(pi * args[j])|.
struct SEntry {
  int sign = 1;
  std::array<Rational, 3> args;
  Real value;
};

/// S and T data of the D-dimensional representation, indexed in
/// enumerate_triples order.
struct ModularData {
  BrieskornTriple p;
  std::vector<EllTriple> triples;
  /// S[row][col] = S_{triples[row]}^{triples[col]}.
  std::vector<std::vector<SEntry>> S;
  /// r(l) in [0, 2); the T entry is exp(pi i r(l)).
  std::vector<Rational> t_exponents;

  std::size_t dimension() const noexcept { return triples.size(); }
  /// Index of canonicalize(ell); throws std::invalid_argument if absent.
  std::size_t index_of(const EllTriple& ell) const;
  /// max |(S S)_{ij} - delta_{ij}|. Reported, not asserted.
  Real involution_defect() const;
  /// max |S_{ij} - S_{ji}|. Reported, not asserted.
  Real symmetry_defect() const;
};

/// r(l) = (P/2)(1 + sum l_j/p_j)^2 reduced into [0, 2).
Rational t_exponent(const BrieskornTriple& p, const EllTriple& ell);

/// S_l^{l'} with sign parity 1 + P + P sum (l_j + l'_j)/p_j + (l x l').p.
SEntry s_entry(const BrieskornTriple& p, const EllTriple& ell, const EllTriple& ell_prime,
               const PrecisionContext& ctx);

ModularData modular_data(const BrieskornTriple& p, const PrecisionContext& ctx);

/// Phi(tau) = (1/2) sum_{n in Z} n chi(n) exp(pi i tau n^2 / 2P).
/// Throws std::invalid_argument unless Im tau > 0.
BigComplex theta_eval(const PeriodicChi& chi, const BigComplex& tau, const PrecisionContext& ctx);
BigComplex theta_eval(const BrieskornTriple& p, const EllTriple& ell, const BigComplex& tau,
                      const PrecisionContext& ctx);

/// Limit of the Eichler integral at M/N:
///   sum_{n=0}^{PN} chi(n) (1 - n/PN) exp(pi i M n^2 / 2PN).
/// Throws std::invalid_argument unless N >= 1 and gcd(M, N) = 1.
BigComplex eichler_limit(const BrieskornTriple& p, const EllTriple& ell, long M, long N,
                         const PrecisionContext& ctx);

/// Closed form at an integer point: -(weighted_sum / 2P) exp(pi i r(l) N0).
BigComplex eichler_integer_value(const BrieskornTriple& p, const EllTriple& ell, long N0,
                                 const PrecisionContext& ctx);

/// sum_{n>=0} chi(n) exp(pi i z n^2 / 2P) erfc(n sqrt(-pi y / P)), y = Im z.
/// Throws std::invalid_argument unless Im z < 0.
BigComplex phi_hat(const BrieskornTriple& p, const EllTriple& ell, const BigComplex& z,
                   const PrecisionContext& ctx);

/// Asymptotic tail sum_k c_k (pi i / 2PN)^k with c_k = L(-2k, chi)/k!.
struct EichlerTail {
  long P = 1;
  std::vector<Rational> coefficients;

  /// Partial sum through order K (K < coefficients.size()).
  BigComplex evaluate(long N, int K, const PrecisionContext& ctx) const;
  /// |c_k (pi / 2PN)^k|.
  Real term_magnitude(long N, int k, const PrecisionContext& ctx) const;
};

EichlerTail eichler_tail(const BrieskornTriple& p, const EllTriple& ell, int K);

struct NearlyModularExpansion {
  BigComplex dominant;
  BigComplex tail;
  Real residual;
  /// Magnitude of the order-K tail term.
  Real last_term;
};

/// Eichler limit at 1/N against -sqrt(N/i) sum_{l'} S_l^{l'} Phi~^{(l')}(-N) plus the tail.
NearlyModularExpansion nearly_modular_expansion(const BrieskornTriple& p, const EllTriple& ell, long N,
                                                int K, const PrecisionContext& ctx);

/// max_l |Phi^{(l)}(tau) - (i/tau)^{3/2} sum_{l'} S_l^{l'} Phi^{(l')}(-1/tau)|.
Real s_transformation_residual(const ModularData& data, const BigComplex& tau, const PrecisionContext& ctx);
/// max_l |Phi^{(l)}(tau + 1) - exp(pi i r(l)) Phi^{(l)}(tau)|.
Real t_transformation_residual(const ModularData& data, const BigComplex& tau, const PrecisionContext& ctx);

}  // namespace bwrt
