#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/chi.hpp"
#include "bwrt/rational.hpp"
#include "bwrt/real.hpp"

#include <array>
#include <vector>

namespace bwrt {

/// phi = 3 - 1/P + 12 (s(p2p3,p1) + s(p1p3,p2) + s(p1p2,p3)).
Rational phi_invariant(const BrieskornTriple& p);

/// Casson invariant from its Dedekind-sum expression.
Rational casson(const BrieskornTriple& p);

/// -(P/4)(1 + sum l_j/p_j)^2 reduced into (-1/2, 1/2].
Rational chern_simons(const BrieskornTriple& p, const EllTriple& ell);

/// (8/sqrt P) prod_j |sin(pi P l_j / p_j^2)|.
Real torsion_sqrt(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx);

/// The cotangent expression for I in R, before reduction mod 8.
Real spectral_flow_raw(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx);

/// Spectral flow in {0..7}. Throws PrecisionError if the cotangent sum is not
/// within 1e-10 of an integer.
int spectral_flow(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx);

/// ((p_k - l_k)/p_k)_k, each in (0, 1).
std::array<Rational, 3> conjugacy_angles(const BrieskornTriple& p, const EllTriple& ell);

/// Inverse of conjugacy_angles; throws std::invalid_argument on angles outside the lattice.
EllTriple triple_from_angles(const BrieskornTriple& p, const std::array<Rational, 3>& angles);

struct FlatConnectionRecord {
  EllTriple triple;
  Rational cs;
  Real torsion_sqrt;
  int spectral_flow = 0;
  std::array<Rational, 3> conjugacy_angles;
};

/// One record per admissible triple, in enumerate_triples order.
std::vector<FlatConnectionRecord> flat_connections(const BrieskornTriple& p, const PrecisionContext& ctx);

/// max over admissible l of |sqrt2 S_{(1,1,1)}^{l} - torsion_sqrt e^{-2 pi i I/4}|.
Real verify_s_torsion(const BrieskornTriple& p, const PrecisionContext& ctx);

}  // namespace bwrt
