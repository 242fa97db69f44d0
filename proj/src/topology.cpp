#include "bwrt/topology.hpp"

#include "bwrt/exactmath.hpp"
#include "bwrt/modularform.hpp"

#include <cmath>
#include <stdexcept>

namespace bwrt {

namespace {

Rational dedekind_total(const BrieskornTriple& p) {
  return dedekind_sum(p[1] * p[2], p[0]) + dedekind_sum(p[0] * p[2], p[1]) + dedekind_sum(p[0] * p[1], p[2]);
}

Rational inverse_square_sum(const BrieskornTriple& p) {
  return make_rational(1, p[0] * p[0]) + make_rational(1, p[1] * p[1]) + make_rational(1, p[2] * p[2]);
}

constexpr double kSnapTolerance = 1e-10;

}  // namespace

Rational phi_invariant(const BrieskornTriple& p) {
  return 3 - make_rational(1, p.product()) + 12 * dedekind_total(p);
}

Rational casson(const BrieskornTriple& p) {
  const long P = p.product();
  return -dedekind_total(p) / 2 - make_rational(P, 24) * (1 - inverse_square_sum(p)) + make_rational(1, 24 * P) -
         Rational(1, 8);
}

Rational chern_simons(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  const Rational x = 1 + make_rational(ell.l[0], p[0]) + make_rational(ell.l[1], p[1]) + make_rational(ell.l[2], p[2]);
  return centered_mod1(-make_rational(p.product(), 4) * x * x);
}

Real torsion_sqrt(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx) {
  validate_triple(p, ell);
  const long P = p.product();
  Real out = ctx.from(8L) / sqrt(ctx.from(P));
  for (std::size_t j = 0; j < 3; ++j) {
    out *= abs(sin_pi(make_rational(P / p[j] * ell.l[j], p[j]), ctx.bits()));
  }
  return out;
}

Real spectral_flow_raw(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx) {
  validate_triple(p, ell);
  const long P = p.product();
  long e = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    e += (P / p[j]) * (p[j] - ell.l[j]);
  }
  // I = -3 - [2e^2/P + sum_j (2/p_j) sum_k cot(kP pi/p_j^2) cot(k pi/p_j) sin^2(k e pi/p_j)]
  Real bracket = ctx.from(make_rational(2 * e, P)) * e;
  for (std::size_t j = 0; j < 3; ++j) {
    const long pj = p[j];
    Real inner = ctx.zero();
    for (long k = 1; k < pj; ++k) {
      const Rational a(Integer(k) * P, Integer(pj) * pj);
      const Real s = sin_pi(make_rational(k * e % pj, pj), ctx.bits());
      inner += cos_pi(a, ctx.bits()) / sin_pi(a, ctx.bits()) * cos_pi(make_rational(k, pj), ctx.bits()) /
               sin_pi(make_rational(k, pj), ctx.bits()) * s * s;
    }
    bracket += inner * 2L / pj;
  }
  return ctx.from(-3L) - bracket;
}

int spectral_flow(const BrieskornTriple& p, const EllTriple& ell, const PrecisionContext& ctx) {
  const Real raw = spectral_flow_raw(p, ell, ctx);
  const long nearest = raw.round_to_long();
  const double distance = std::fabs((raw - ctx.from(nearest)).to_double());
  if (!(distance < kSnapTolerance)) {
    throw PrecisionError("spectral flow for " + p.to_string() + ", l = " + ell.to_string() +
                         " is not near an integer (distance " + std::to_string(distance) + ")");
  }
  return static_cast<int>(((nearest % 8) + 8) % 8);
}

std::array<Rational, 3> conjugacy_angles(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  return {make_rational(p[0] - ell.l[0], p[0]), make_rational(p[1] - ell.l[1], p[1]),
          make_rational(p[2] - ell.l[2], p[2])};
}

EllTriple triple_from_angles(const BrieskornTriple& p, const std::array<Rational, 3>& angles) {
  EllTriple ell;
  for (std::size_t j = 0; j < 3; ++j) {
    const Rational l = (1 - angles[j]) * p[j];
    if (!is_integer(l)) {
      throw std::invalid_argument("triple_from_angles: angle is not a multiple of 1/p_j");
    }
    ell.l[j] = numerator_of(l).convert_to<long>();
  }
  validate_triple(p, ell);
  return ell;
}

std::vector<FlatConnectionRecord> flat_connections(const BrieskornTriple& p, const PrecisionContext& ctx) {
  std::vector<FlatConnectionRecord> out;
  for (const auto& ell : admissible_triples(p).triples) {
    out.push_back({ell, chern_simons(p, ell), torsion_sqrt(p, ell, ctx), spectral_flow(p, ell, ctx),
                   conjugacy_angles(p, ell)});
  }
  return out;
}

Real verify_s_torsion(const BrieskornTriple& p, const PrecisionContext& ctx) {
  const EllTriple base = make_triple(1, 1, 1);
  const Real root_two = sqrt(ctx.from(2L));
  Real worst = ctx.zero();
  for (const auto& record : flat_connections(p, ctx)) {
    const SEntry entry = s_entry(p, base, record.triple, ctx);
    // e^{-2 pi i I/4} = e^{-pi i I/2}
    const BigComplex phase = BigComplex::exp_i_pi(make_rational(-record.spectral_flow, 2), ctx.bits());
    const BigComplex lhs(root_two * entry.value, ctx.zero());
    worst = max(worst, abs(lhs - phase * record.torsion_sqrt));
  }
  return worst;
}

}  // namespace bwrt
