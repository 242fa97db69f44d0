// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "bwrt/chi.hpp"
#include "bwrt/exactmath.hpp"
#include "bwrt/modularform.hpp"
#include "bwrt/ohtsuki.hpp"
#include "bwrt/topology.hpp"
#include "bwrt/wrt.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace bwrt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string sci(const Real& x) { return x.to_string(3); }

unsigned workers() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

const std::vector<BrieskornTriple> kExamples = {BrieskornTriple(2, 3, 5), BrieskornTriple(2, 3, 7),
                                                BrieskornTriple(3, 4, 5)};

Outcome table1() {
  const auto report = table1_verify();
  Outcome o{report.ok() && report.rows == 26 && report.cells == 234, ""};
  o.detail = str(report.cells) + " cells, " + str(report.mismatches.size()) + " mismatches";
  return o;
}

Outcome surgery_identity() {
  const PrecisionContext ctx(50);
  const Real bound = ctx.power_of_ten(30);
  Real worst = ctx.zero();
  Outcome o;
  std::vector<BrieskornTriple> manifolds = {BrieskornTriple(2, 3, 7), BrieskornTriple(3, 4, 5),
                                            BrieskornTriple(2, 5, 7), BrieskornTriple(2, 3, 11),
                                            BrieskornTriple(2, 3, 5)};
  for (const auto& p : manifolds) {
    for (long N = 3; N <= 25; ++N) {
      const Real r = surgery_identity_residual(p, N, ctx, workers()).residual;
      worst = max(worst, r);
      if (!(r < bound)) {
        o.pass = false;
        o.detail += p.to_string() + " N=" + str(N) + " ";
      }
    }
  }
  o.detail += "max residual " + sci(worst);
  return o;
}

Outcome modular() {
  const PrecisionContext ctx(50);
  const Real bound = ctx.power_of_ten(30);
  const std::vector<BigComplex> taus = {BigComplex(ctx.zero(), ctx.from(1L)),
                                        BigComplex(ctx.from(Rational(1, 3)), ctx.from(Rational(2, 3))),
                                        BigComplex(ctx.zero(), ctx.from(Rational(1, 5)))};
  Real worst_s = ctx.zero();
  Real worst_t = ctx.zero();
  for (const auto& p : kExamples) {
    const auto data = modular_data(p, ctx);
    for (const auto& tau : taus) {
      worst_s = max(worst_s, s_transformation_residual(data, tau, ctx));
      worst_t = max(worst_t, t_transformation_residual(data, tau, ctx));
    }
  }
  return {worst_s < bound && worst_t < bound, "max S residual " + sci(worst_s) + ", max T residual " + sci(worst_t)};
}

Outcome gamma_casson() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : brieskorn_triples_up_to(1000)) {
    const long gamma = admissible_triples(p).gamma;
    const Rational c = casson(p);
    const bool ok = Rational(gamma) == gamma_closed_form(p) && gamma == p.dimension() - mordell_count(p) &&
                    is_integer(c) && c == Rational(-gamma, 2);
    if (!ok) {
      o.pass = false;
      o.detail += p.to_string() + " ";
    }
    ++checked;
  }
  o.detail += str(checked) + " manifolds";
  return o;
}

Outcome cs_and_flow() {
  const PrecisionContext ctx(50);
  struct Expected {
    BrieskornTriple p;
    std::multiset<Rational> cs;
    std::multiset<int> flows;
  };
  const std::vector<Expected> expected = {
      {BrieskornTriple(2, 3, 5), {make_rational(-1, 120), make_rational(-49, 120)}, {4, 0}},
      {BrieskornTriple(2, 3, 7), {make_rational(-25, 168), make_rational(47, 168)}, {6, 2}},
      {BrieskornTriple(3, 4, 5),
       {make_rational(119, 240), make_rational(-49, 240), make_rational(-1, 60), make_rational(11, 60)},
       {2, 4, 6, 0}},
  };
  Outcome o;
  for (const auto& e : expected) {
    std::multiset<Rational> cs;
    std::multiset<int> flows;
    for (const auto& rec : flat_connections(e.p, ctx)) {
      cs.insert(rec.cs);
      flows.insert(rec.spectral_flow);
    }
    const bool ok = cs == e.cs && flows == e.flows;
    o.pass = o.pass && ok;
    o.detail += e.p.to_string() + (ok ? " ok " : " MISMATCH ");
  }
  return o;
}

Outcome s_torsion() {
  const PrecisionContext ctx(50);
  const Real bound = ctx.power_of_ten(30);
  Real worst = ctx.zero();
  for (const auto& p : kExamples) {
    worst = max(worst, verify_s_torsion(p, ctx));
  }
  return {worst < bound, "max residual " + sci(worst)};
}

Outcome l_dual() {
  Outcome o;
  for (const auto& p : kExamples) {
    const auto bernoulli = l_function_values(build_chi(p, make_triple(1, 1, 1)), 8);
    const auto taylor = oracle::hyperbolic_l_values(p, 8);
    const bool ok = bernoulli == taylor;
    o.pass = o.pass && ok;
    o.detail += p.to_string() + (ok ? " ok " : " MISMATCH ");
  }
  return o;
}

Outcome tau_infinity() {
  Outcome o;
  for (const auto& p : {BrieskornTriple(2, 3, 5), BrieskornTriple(2, 3, 7), BrieskornTriple(3, 4, 5),
                        BrieskornTriple(2, 5, 7), BrieskornTriple(2, 3, 11)}) {
    const Rational r = tau_infinity_check(p, 8);
    o.pass = o.pass && r == 0;
    o.detail += p.to_string() + "=" + to_string(r) + " ";
  }
  return o;
}

Outcome asymptotics() {
  const PrecisionContext ctx(50);
  Outcome o;
  for (const auto& p : {BrieskornTriple(2, 3, 5), BrieskornTriple(2, 3, 7)}) {
    std::vector<Real> errors;
    for (long N : {64L, 128L, 256L}) {
      errors.push_back(asymptotic_approx(p, N, 2, ctx, workers()).abs_error);
    }
    o.detail += p.to_string() + " factors";
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
      const double factor = (errors[i] / errors[i + 1]).to_double();
      o.pass = o.pass && factor >= 4.0 && factor <= 16.0;
      o.detail += " " + str(factor);
    }
    const auto at200 = asymptotic_approx(p, 200, 2, ctx, workers());
    o.pass = o.pass && at200.abs_error < at200.last_tail_term;
    o.detail += "; N=200 error " + sci(at200.abs_error) + " vs term " + sci(at200.last_tail_term) + "; ";
  }
  return o;
}

Outcome gauss() {
  const PrecisionContext ctx(50);
  const Real bound = ctx.power_of_ten(30);
  Real worst = ctx.zero();
  for (long N = 1; N <= 50; ++N) {
    const BigComplex expected = BigComplex::exp_i_pi(Rational(-1, 4), ctx.bits()) * sqrt(ctx.from(2 * N));
    worst = max(worst, abs(gauss_sum(N, ctx) - expected));
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> pick(-15, 15);
  Real worst_rec = ctx.zero();
  int checked = 0;
  while (checked < 50) {
    const long N = pick(rng);
    const long M = pick(rng);
    if (N == 0 || M == 0 || (N * M) % 2 != 0) {
      continue;
    }
    const auto sides = gauss_reciprocity(N, M, make_rational(pick(rng), std::labs(N)), ctx);
    worst_rec = max(worst_rec, abs(sides.lhs - sides.rhs));
    ++checked;
  }
  return {worst < bound && worst_rec < bound,
          "G(N) residual " + sci(worst) + ", reciprocity residual " + sci(worst_rec) + " over 50 cases"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table1-reproduction", table1},     {"surgery-eichler-identity", surgery_identity},
      {"modular-transformation", modular}, {"gamma-casson-consistency", gamma_casson},
      {"cs-and-spectral-flow", cs_and_flow}, {"s-matrix-torsion", s_torsion},
      {"l-function-dual", l_dual},         {"tau-infinity-consistency", tau_infinity},
      {"asymptotic-quality", asymptotics}, {"gauss-machinery", gauss},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail << " ("
              << seconds << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
