#include "bwrt/modularform.hpp"

#include "bwrt/exactmath.hpp"

#include <numeric>
#include <stdexcept>

namespace bwrt {

namespace {

// Terms below this are dropped; it sits well under ctx.tolerance().
Real truncation_threshold(const PrecisionContext& ctx, long P) {
  return ctx.power_of_ten(ctx.decimal_digits() + PrecisionContext::kGuardDigits / 2) / (4L * P);
}

Rational sum_over_p(const BrieskornTriple& p, const EllTriple& ell) {
  return make_rational(ell.l[0], p[0]) + make_rational(ell.l[1], p[1]) + make_rational(ell.l[2], p[2]);
}

}  // namespace

std::size_t ModularData::index_of(const EllTriple& ell) const {
  const EllTriple canonical = canonicalize(p, ell);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (triples[i] == canonical) {
      return i;
    }
  }
  throw std::invalid_argument("triple " + ell.to_string() + " not indexed for " + p.to_string());
}

Real ModularData::involution_defect() const {
  const std::size_t d = dimension();
  const mpfr_prec_t bits = S.front().front().value.precision();
  Real worst(bits);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Real acc(bits);
      for (std::size_t k = 0; k < d; ++k) {
        acc += S[i][k].value * S[k][j].value;
      }
      if (i == j) {
        acc -= Real(1L, bits);
      }
      worst = max(worst, abs(acc));
    }
  }
  return worst;
}

Real ModularData::symmetry_defect() const {
  const std::size_t d = dimension();
  Real worst(S.front().front().value.precision());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      worst = max(worst, abs(S[i][j].value - S[j][i].value));
    }
  }
  return worst;
}

Rational t_exponent(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  const Rational x = 1 + sum_over_p(p, ell);
  return mod(make_rational(p.product(), 2) * x * x, 2);
}

SEntry s_entry(const BrieskornTriple& p, const EllTriple& ell, const EllTriple& ell_prime,
               const PrecisionContext& ctx) {
  validate_triple(p, ell);
  validate_triple(p, ell_prime);
  const long P = p.product();
  const auto& l = ell.l;
  const auto& m = ell_prime.l;
  long parity = 1 + P;
  for (std::size_t j = 0; j < 3; ++j) {
    parity += (P / p[j]) * (l[j] + m[j]);
  }
  parity += (l[1] * m[2] - l[2] * m[1]) * p[0] + (l[2] * m[0] - l[0] * m[2]) * p[1] +
            (l[0] * m[1] - l[1] * m[0]) * p[2];

  SEntry entry;
  entry.sign = (parity % 2 == 0) ? 1 : -1;
  Real magnitude = sqrt(ctx.from(make_rational(32, P)));
  for (std::size_t j = 0; j < 3; ++j) {
    entry.args[j] = Rational(Integer(P) * l[j] * m[j], Integer(p[j]) * p[j]);
    // A factor vanishes when p_j is composite and divides l_j l'_j; the entry is then 0.
    const int s = sin_pi_sign(entry.args[j]);
    entry.sign *= s == 0 ? 1 : s;
    magnitude *= abs(sin_pi(entry.args[j], ctx.bits()));
  }
  entry.value = entry.sign < 0 ? -magnitude : magnitude;
  return entry;
}

ModularData modular_data(const BrieskornTriple& p, const PrecisionContext& ctx) {
  ModularData data{p, enumerate_triples(p), {}, {}};
  const std::size_t d = data.triples.size();
  data.S.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    data.S[i].reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      data.S[i].push_back(s_entry(p, data.triples[i], data.triples[j], ctx));
    }
    data.t_exponents.push_back(t_exponent(p, data.triples[i]));
  }
  return data;
}

BigComplex theta_eval(const PeriodicChi& chi, const BigComplex& tau, const PrecisionContext& ctx) {
  if (tau.imag().sign() <= 0) {
    throw std::invalid_argument("theta_eval: Im tau must be positive");
  }
  const long two_p = chi.modulus();
  const long P = two_p / 2;
  const Real pi = ctx.pi();
  // exponent = scale * n^2 with scale = pi i tau / 2P.
  const Real decay = pi * tau.imag() / two_p;
  const Real rotation = pi * tau.real() / two_p;
  const Real threshold = truncation_threshold(ctx, P);
  // n e^{-decay n^2} is decreasing once n^2 > 1/(2 decay).
  const Real peak_sq = ctx.from(1L) / (decay * 2L);

  BigComplex total(ctx.bits());
  for (long block = 0;; ++block) {
    const long start = block * two_p;
    if (block > 0) {
      const Real n0 = ctx.from(start);
      if (n0 * n0 > peak_sq && n0 * exp(-(decay * n0 * n0)) < threshold) {
        break;
      }
    }
    for (long r : chi.support()) {
      const long n = start + r;
      if (n == 0) {
        continue;
      }
      const Real n_sq = ctx.from(Rational(Integer(n) * n));
      BigComplex term = exp(BigComplex(-(decay * n_sq), rotation * n_sq));
      term *= ctx.from(n * chi(n));
      total += term;
    }
  }
  return total;
}

BigComplex theta_eval(const BrieskornTriple& p, const EllTriple& ell, const BigComplex& tau,
                      const PrecisionContext& ctx) {
  return theta_eval(build_chi(p, ell), tau, ctx);
}

BigComplex eichler_limit(const BrieskornTriple& p, const EllTriple& ell, long M, long N,
                         const PrecisionContext& ctx) {
  if (N < 1) {
    throw std::invalid_argument("eichler_limit: N must be positive");
  }
  if (std::gcd(M, N) != 1) {
    throw std::invalid_argument("eichler_limit: M and N must be coprime");
  }
  const PeriodicChi chi = build_chi(p, ell);
  const long P = p.product();
  const Integer PN = Integer(P) * N;
  BigComplex total(ctx.bits());
  for (long start = 0; start <= P * N; start += 2 * P) {
    for (long r : chi.support()) {
      const long n = start + r;
      if (n > P * N) {
        break;
      }
      const Rational weight = 1 - Rational(Integer(n), PN);
      const Rational phase(Integer(M) * n * n, 2 * PN);
      total += BigComplex::exp_i_pi(phase, ctx.bits()) * ctx.from(weight * chi(n));
    }
  }
  return total;
}

BigComplex eichler_integer_value(const BrieskornTriple& p, const EllTriple& ell, long N0,
                                 const PrecisionContext& ctx) {
  const long ws = weighted_sum(build_chi(p, ell));
  const Rational amplitude = -make_rational(ws, 2 * p.product());
  return BigComplex::exp_i_pi(t_exponent(p, ell) * N0, ctx.bits()) * ctx.from(amplitude);
}

BigComplex phi_hat(const BrieskornTriple& p, const EllTriple& ell, const BigComplex& z,
                   const PrecisionContext& ctx) {
  if (z.imag().sign() >= 0) {
    throw std::invalid_argument("phi_hat: Im z must be negative");
  }
  const PeriodicChi chi = build_chi(p, ell);
  const long P = p.product();
  const long two_p = 2 * P;
  const Real pi = ctx.pi();
  const Real growth = -(pi * z.imag()) / two_p;  // > 0
  const Real rotation = pi * z.real() / two_p;
  const Real slope = sqrt(-(pi * z.imag()) / P);
  const Real sqrt_pi = sqrt(pi);
  const Real threshold = truncation_threshold(ctx, P);

  BigComplex total(ctx.bits());
  for (long block = 0;; ++block) {
    const long start = block * two_p;
    if (block > 0) {
      // erfc(x) <= e^{-x^2}/(x sqrt(pi)), so |term| <= e^{-growth n^2}/(n slope sqrt(pi)).
      const Real n0 = ctx.from(start);
      if (exp(-(growth * n0 * n0)) / (n0 * slope * sqrt_pi) < threshold) {
        break;
      }
    }
    for (long r : chi.support()) {
      const long n = start + r;
      if (n == 0) {
        continue;
      }
      const Real n_real = ctx.from(n);
      const Real n_sq = n_real * n_real;
      BigComplex term = exp(BigComplex(growth * n_sq, rotation * n_sq));
      term *= erfc(n_real * slope, ctx) * ctx.from(static_cast<long>(chi(n)));
      total += term;
    }
  }
  return total;
}

BigComplex EichlerTail::evaluate(long N, int K, const PrecisionContext& ctx) const {
  if (K < 0 || static_cast<std::size_t>(K) >= coefficients.size()) {
    throw std::invalid_argument("EichlerTail: order outside the stored coefficients");
  }
  // w = pi i / 2PN
  const BigComplex w(ctx.zero(), ctx.pi() / (2 * P * N));
  BigComplex power(ctx.from(1L), ctx.zero());
  BigComplex total(ctx.bits());
  for (int k = 0; k <= K; ++k) {
    total += power * ctx.from(coefficients[static_cast<std::size_t>(k)]);
    power *= w;
  }
  return total;
}

Real EichlerTail::term_magnitude(long N, int k, const PrecisionContext& ctx) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coefficients.size()) {
    throw std::invalid_argument("EichlerTail: order outside the stored coefficients");
  }
  return abs(ctx.from(coefficients[static_cast<std::size_t>(k)])) * pow(ctx.pi() / (2 * P * N), k);
}

EichlerTail eichler_tail(const BrieskornTriple& p, const EllTriple& ell, int K) {
  if (K < 0) {
    throw std::invalid_argument("eichler_tail: K must be non-negative");
  }
  EichlerTail tail;
  tail.P = p.product();
  const auto values = l_function_values(build_chi(p, ell), K);
  for (int k = 0; k <= K; ++k) {
    tail.coefficients.push_back(values[static_cast<std::size_t>(k)] / Rational(factorial(k)));
  }
  return tail;
}

NearlyModularExpansion nearly_modular_expansion(const BrieskornTriple& p, const EllTriple& ell, long N,
                                                int K, const PrecisionContext& ctx) {
  if (N < 1) {
    throw std::invalid_argument("nearly_modular_expansion: N must be positive");
  }
  const ModularData data = modular_data(p, ctx);
  const std::size_t row = data.index_of(ell);
  BigComplex sum(ctx.bits());
  for (std::size_t j = 0; j < data.dimension(); ++j) {
    sum += eichler_integer_value(p, data.triples[j], -N, ctx) * data.S[row][j].value;
  }
  // sqrt(N/i) = sqrt(N) e^{-pi i/4}
  const BigComplex root = BigComplex::exp_i_pi(Rational(-1, 4), ctx.bits()) * sqrt(ctx.from(N));
  const EichlerTail tail = eichler_tail(p, ell, K);
  NearlyModularExpansion out{-(root * sum), tail.evaluate(N, K, ctx), ctx.zero(), tail.term_magnitude(N, K, ctx)};
  const BigComplex exact = eichler_limit(p, ell, 1, N, ctx);
  out.residual = abs(exact - out.dominant - out.tail);
  return out;
}

Real s_transformation_residual(const ModularData& data, const BigComplex& tau, const PrecisionContext& ctx) {
  const std::size_t d = data.dimension();
  const BigComplex i_unit(ctx.zero(), ctx.from(1L));
  const BigComplex inverted = -(BigComplex(ctx.from(1L), ctx.zero()) / tau);
  const BigComplex factor = pow(i_unit / tau, ctx.from(Rational(3, 2)));
  std::vector<BigComplex> at_tau;
  std::vector<BigComplex> at_inverted;
  for (const auto& ell : data.triples) {
    const PeriodicChi chi = build_chi(data.p, ell);
    at_tau.push_back(theta_eval(chi, tau, ctx));
    at_inverted.push_back(theta_eval(chi, inverted, ctx));
  }
  Real worst = ctx.zero();
  for (std::size_t i = 0; i < d; ++i) {
    BigComplex rhs(ctx.bits());
    for (std::size_t j = 0; j < d; ++j) {
      rhs += at_inverted[j] * data.S[i][j].value;
    }
    worst = max(worst, abs(at_tau[i] - factor * rhs));
  }
  return worst;
}

Real t_transformation_residual(const ModularData& data, const BigComplex& tau, const PrecisionContext& ctx) {
  const BigComplex shifted = tau + BigComplex(ctx.from(1L), ctx.zero());
  Real worst = ctx.zero();
  for (std::size_t i = 0; i < data.dimension(); ++i) {
    const PeriodicChi chi = build_chi(data.p, data.triples[i]);
    const BigComplex lhs = theta_eval(chi, shifted, ctx);
    const BigComplex rhs = BigComplex::exp_i_pi(data.t_exponents[i], ctx.bits()) * theta_eval(chi, tau, ctx);
    worst = max(worst, abs(lhs - rhs));
  }
  return worst;
}

}  // namespace bwrt
