#include "bwrt/wrt.hpp"

#include "bwrt/chi.hpp"
#include "bwrt/modularform.hpp"
#include "bwrt/topology.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bwrt {

namespace {

struct PartialSum {
  BigComplex value;
  Real magnitude;  // sum of |term|
};

// Terms n in [begin, end) with N not dividing n.
PartialSum surgery_chunk(const std::array<long, 3>& exps, long N, long begin, long end, mpfr_prec_t bits) {
  const long P = exps[0] * exps[1] * exps[2];
  const Integer two_pn = Integer(2) * P * N;
  PartialSum out{BigComplex(bits), Real(bits)};
  for (long n = begin; n < end; ++n) {
    if (n % N == 0) {
      continue;
    }
    // prod (2i sin x_j) / (2i sin y) = -4 prod sin x_j / sin y
    Real amplitude = sin_pi(make_rational(n, N * exps[0]), bits);
    amplitude *= sin_pi(make_rational(n, N * exps[1]), bits);
    amplitude *= sin_pi(make_rational(n, N * exps[2]), bits);
    amplitude /= sin_pi(make_rational(n, N), bits);
    amplitude *= -4L;
    out.magnitude += abs(amplitude);
    out.value += BigComplex::exp_i_pi(Rational(-Integer(n) * n, two_pn), bits) * amplitude;
  }
  return out;
}

PartialSum tree_reduce(std::vector<PartialSum> parts) {
  while (parts.size() > 1) {
    std::vector<PartialSum> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      next.push_back({parts[i].value + parts[i + 1].value, parts[i].magnitude + parts[i + 1].magnitude});
    }
    if (parts.size() % 2 == 1) {
      next.push_back(std::move(parts.back()));
    }
    parts = std::move(next);
  }
  return std::move(parts.front());
}

PartialSum surgery_sum(const std::array<long, 3>& exps, long N, const PrecisionContext& ctx, unsigned workers) {
  if (N < 2) {
    throw std::invalid_argument("rozansky_normalized: N must be at least 2");
  }
  for (long e : exps) {
    if (e < 1) {
      throw std::invalid_argument("rozansky_normalized: exponents must be positive");
    }
  }
  const long total = 2 * exps[0] * exps[1] * exps[2] * N;
  const unsigned w = std::max(1U, workers);
  std::vector<PartialSum> parts(w, PartialSum{BigComplex(ctx.bits()), Real(ctx.bits())});
  std::vector<std::exception_ptr> errors(w);
  auto run = [&](unsigned i) {
    try {
      const long begin = total * static_cast<long>(i) / static_cast<long>(w);
      const long end = total * static_cast<long>(i + 1) / static_cast<long>(w);
      parts[i] = surgery_chunk(exps, N, begin, end, ctx.bits());
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (unsigned i = 0; i < w; ++i) {
      threads.emplace_back(run, i);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return tree_reduce(std::move(parts));
}

Real normalization(long P, long N, const PrecisionContext& ctx) {
  return ctx.from(1L) / (sqrt(ctx.from(2 * P * N)) * 2L);
}

BigComplex poincare_shift(long N, long sign, const PrecisionContext& ctx) {
  return BigComplex::exp_i_pi(make_rational(sign, 60 * N), ctx.bits());
}

}  // namespace

BigComplex rozansky_normalized_raw(const std::array<long, 3>& exponents, long N, const PrecisionContext& ctx,
                                   unsigned workers) {
  const PartialSum sum = surgery_sum(exponents, N, ctx, workers);
  const long P = exponents[0] * exponents[1] * exponents[2];
  return BigComplex::exp_i_pi(Rational(1, 4), ctx.bits()) * sum.value * normalization(P, N, ctx);
}

BigComplex rozansky_normalized(const BrieskornTriple& p, long N, const PrecisionContext& ctx, unsigned workers) {
  return rozansky_normalized_raw(p.exponents(), N, ctx, workers);
}

BigComplex wrt_prefactor(const BrieskornTriple& p, long N, const PrecisionContext& ctx) {
  if (N < 1) {
    throw std::invalid_argument("wrt_prefactor: N must be positive");
  }
  const Rational exponent = 2 * (phi_invariant(p) / 4 - Rational(1, 2)) / N;
  const BigComplex one(ctx.from(1L), ctx.zero());
  return BigComplex::exp_i_pi(exponent, ctx.bits()) * (BigComplex::exp_i_pi(make_rational(2, N), ctx.bits()) - one);
}

WrtResult tau_n(const BrieskornTriple& p, long N, const PrecisionContext& ctx, unsigned workers) {
  if (N < 3) {
    throw std::invalid_argument("tau_n: N must be at least 3");
  }
  const long P = p.product();
  const PartialSum sum = surgery_sum(p.exponents(), N, ctx, workers);
  const Real scale = normalization(P, N, ctx);
  WrtResult out;
  out.N = N;
  out.normalized = BigComplex::exp_i_pi(Rational(1, 4), ctx.bits()) * sum.value * scale;
  out.tau = out.normalized / wrt_prefactor(p, N, ctx);
  // Z_k = tau_{k+2} sin(pi/N) / sqrt(N/2)
  out.z_witten = out.tau * (sin_pi(make_rational(1, N), ctx.bits()) / sqrt(ctx.from(make_rational(N, 2))));
  out.term_count = 2 * P * N - 2 * P;
  Real ulp = ctx.from(1L);
  mpfr_mul_2si(ulp.get(), ulp.get(), -static_cast<long>(ctx.bits()), MPFR_RNDN);
  out.error_budget = ulp * out.term_count * sum.magnitude * scale;
  out.workers = std::max(1U, workers);
  return out;
}

BigComplex tau_from_eichler(const BrieskornTriple& p, long N, const PrecisionContext& ctx) {
  if (N < 3) {
    throw std::invalid_argument("tau_from_eichler: N must be at least 3");
  }
  BigComplex value = eichler_limit(p, make_triple(1, 1, 1), 1, N, ctx) * ctx.from(Rational(1, 2));
  if (p.is_poincare()) {
    value += poincare_shift(N, 1, ctx);
  }
  return value / wrt_prefactor(p, N, ctx);
}

SurgeryIdentityCheck surgery_identity_residual(const BrieskornTriple& p, long N, const PrecisionContext& ctx, unsigned workers) {
  const BigComplex surgery = rozansky_normalized(p, N, ctx, workers);
  const BigComplex half_eichler = eichler_limit(p, make_triple(1, 1, 1), 1, N, ctx) * ctx.from(Rational(1, 2));
  SurgeryIdentityCheck out{surgery, half_eichler, ctx.zero()};
  if (p.is_poincare()) {
    const BigComplex shift = poincare_shift(N, -1, ctx);
    out.lhs = shift * surgery;
    out.rhs = BigComplex(ctx.from(1L), ctx.zero()) + shift * half_eichler;
  }
  out.residual = abs(out.lhs - out.rhs);
  return out;
}

BigComplex excluded_subsum_regularized(const BrieskornTriple& p, long N, const PrecisionContext& ctx) {
  if (N < 1) {
    throw std::invalid_argument("excluded_subsum_regularized: N must be positive");
  }
  const long P = p.product();
  const PeriodicChi chi = build_chi(p, make_triple(1, 1, 1));
  const long f = 2 * P * N;
  // Abel limit of sum_{n>=0} a(n) e^{-nt} for f-periodic mean-zero a: -sum_{n=1}^{f} a(n) B_1(n/f).
  BigComplex total(ctx.bits());
  for (long start = 0; start < f; start += 2 * P) {
    for (long r : chi.support()) {
      const long n = start + r;
      BigComplex gauss(ctx.bits());
      for (long k = 0; k < N; ++k) {
        const Integer shifted = Integer(2 * P) * k + n;
        gauss += BigComplex::exp_i_pi(Rational(shifted * shifted, Integer(2) * P * N), ctx.bits());
      }
      total -= gauss * ctx.from((make_rational(n, f) - Rational(1, 2)) * chi(n));
    }
  }
  return total / ctx.from(N);
}

AsymptoticApprox asymptotic_approx(const BrieskornTriple& p, long N, int K, const PrecisionContext& ctx,
                                   unsigned workers) {
  if (N < 3) {
    throw std::invalid_argument("asymptotic_approx: N must be at least 3");
  }
  if (K < 0) {
    throw std::invalid_argument("asymptotic_approx: K must be non-negative");
  }
  const EllTriple base = make_triple(1, 1, 1);
  BigComplex sum(ctx.bits());
  for (const auto& ell : admissible_triples(p).triples) {
    const SEntry entry = s_entry(p, base, ell, ctx);
    sum += BigComplex::exp_i_pi(-t_exponent(p, ell) * N, ctx.bits()) * entry.value;
  }
  const BigComplex root = BigComplex::exp_i_pi(Rational(-1, 4), ctx.bits()) * sqrt(ctx.from(N));
  const EichlerTail tail = eichler_tail(p, base, K);
  const Real half = ctx.from(Rational(1, 2));
  AsymptoticApprox out{root * sum, tail.evaluate(N, K, ctx) * half, rozansky_normalized(p, N, ctx, workers),
                       ctx.zero(), tail.term_magnitude(N, K, ctx) * half};
  if (p.is_poincare()) {
    out.tail += poincare_shift(N, 1, ctx);
  }
  out.abs_error = abs(out.exact - out.dominant - out.tail);
  return out;
}

BigComplex witten_dominant(const BrieskornTriple& p, long N, const PrecisionContext& ctx) {
  if (N < 3) {
    throw std::invalid_argument("witten_dominant: N must be at least 3");
  }
  const EllTriple base = make_triple(1, 1, 1);
  const Real root_two = sqrt(ctx.from(2L));
  BigComplex sum(ctx.bits());
  for (const auto& ell : admissible_triples(p).triples) {
    const SEntry entry = s_entry(p, base, ell, ctx);
    sum += BigComplex::exp_i_pi(-t_exponent(p, ell) * N, ctx.bits()) * (root_two * entry.value);
  }
  const Rational phase = Rational(-3, 4) - phi_invariant(p) / (2 * N);
  return BigComplex::exp_i_pi(phase, ctx.bits()) * sum * ctx.from(Rational(1, 2));
}

}  // namespace bwrt
