#include "oracles.hpp"

#include <stdexcept>

namespace bwrt::oracle {

namespace {

using Series = std::vector<Rational>;

Integer int_factorial(long n) {
  Integer out(1);
  for (long i = 2; i <= n; ++i) {
    out *= i;
  }
  return out;
}

// sh(a z)/z through z^degree.
Series sinh_over_z(long a, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  Integer power(a);
  for (std::size_t m = 0; 2 * m <= degree; ++m) {
    out[2 * m] = Rational(power, int_factorial(static_cast<long>(2 * m + 1)));
    power *= a;
    power *= a;
  }
  return out;
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series divide(const Series& num, const Series& den) {
  Series out(num.size(), Rational(0));
  Series rem = num;
  for (std::size_t i = 0; i < num.size(); ++i) {
    out[i] = rem[i] / den[0];
    for (std::size_t j = 0; i + j < num.size(); ++j) {
      rem[i + j] -= out[i] * den[j];
    }
  }
  return out;
}

}  // namespace

Real dedekind_cot(long b, long a, const PrecisionContext& ctx) {
  const Real pi = ctx.pi();
  Real total = ctx.zero();
  for (long k = 1; k < a; ++k) {
    total += cot(pi * k / a) * cot(pi * (k * b) / a);
  }
  return total / (4 * a);
}

std::vector<Rational> hyperbolic_l_values(const BrieskornTriple& p, int n_max) {
  const std::size_t degree = 2 * static_cast<std::size_t>(n_max);
  const long P = p.product();
  // 4 z^3 prod(sh/z) / (z sh(Pz)/z) = 4 z^2 (...) / (...)
  Series num = sinh_over_z(p[0] * p[1], degree + 2);
  num = multiply(num, sinh_over_z(p[1] * p[2], degree + 2));
  num = multiply(num, sinh_over_z(p[0] * p[2], degree + 2));
  Series quotient = divide(num, sinh_over_z(P, degree + 2));
  Series f(degree + 1, Rational(0));
  for (std::size_t i = 2; i <= degree; ++i) {
    f[i] = 4 * quotient[i - 2];
  }
  if (p.is_poincare()) {
    for (std::size_t m = 0; 2 * m <= degree; ++m) {
      f[2 * m] -= Rational(2) / Rational(int_factorial(static_cast<long>(2 * m)));
    }
  }
  std::vector<Rational> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(f[2 * static_cast<std::size_t>(n)] * Rational(int_factorial(2 * n)));
  }
  return out;
}

std::vector<long> long_division_series(const BrieskornTriple& p, long truncation, long& min_exponent) {
  const long P = p.product();
  const long x[3] = {p[0] * p[1], p[1] * p[2], p[0] * p[2]};
  min_exponent = P - (x[0] + x[1] + x[2]);
  const long length = truncation - min_exponent + 1;
  // Numerator polynomial prod (z^{2x} - 1).
  std::vector<long> num{1};
  for (long xi : x) {
    std::vector<long> next(num.size() + static_cast<std::size_t>(2 * xi), 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i + static_cast<std::size_t>(2 * xi)] += num[i];
      next[i] -= num[i];
    }
    num = std::move(next);
  }
  num.resize(std::max<std::size_t>(num.size(), static_cast<std::size_t>(length)), 0);
  // Divide by (z^{2P} - 1), lowest degree first: q_i = -(r_i), r_{i+2P} += q_i.
  std::vector<long> quotient(static_cast<std::size_t>(length), 0);
  for (long i = 0; i < length; ++i) {
    const long q = -num[static_cast<std::size_t>(i)];
    quotient[static_cast<std::size_t>(i)] = q;
    num[static_cast<std::size_t>(i)] = 0;
    if (static_cast<std::size_t>(i + 2 * P) < num.size()) {
      num[static_cast<std::size_t>(i + 2 * P)] -= q;
    }
  }
  return quotient;
}

Real romberg_erfc_one(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  auto f = [bits](const Real& t) { return exp(-(t * t)); };
  const int levels = 14;
  std::vector<std::vector<Real>> R(levels, std::vector<Real>(levels, Real(bits)));
  const Real a(0L, bits);
  const Real b(1L, bits);
  R[0][0] = (f(a) + f(b)) / 2L;
  long panels = 1;
  for (int i = 1; i < levels; ++i) {
    panels *= 2;
    Real mid(bits);
    for (long k = 1; k < panels; k += 2) {
      mid += f(Real(make_rational(k, panels), bits));
    }
    R[i][0] = R[i - 1][0] / 2L + mid / panels;
    Real factor(4L, bits);
    for (int j = 1; j <= i; ++j) {
      R[i][j] = R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (factor - Real(1L, bits));
      factor *= 4L;
    }
  }
  const Real integral = R[levels - 1][levels - 1];
  return Real(1L, bits) - integral * 2L / sqrt(Real::pi(bits));
}

BigComplex half_range_surgery_sum(const BrieskornTriple& p, long N, const PrecisionContext& ctx) {
  const long P = p.product();
  const mpfr_prec_t bits = ctx.bits();
  BigComplex total(bits);
  for (long a = 1; a <= N - 1; ++a) {
    for (long n = 0; n <= P - 1; ++n) {
      const long k = a + 2 * N * n;
      // e^{-k^2 pi i/2PN} prod (2i sin) / (2i sin)
      BigComplex ratio(Real(1L, bits), Real(bits));
      for (long pj : p.exponents()) {
        ratio *= BigComplex(Real(bits), sin_pi(make_rational(k, N * pj), bits) * 2L);
      }
      ratio /= BigComplex(Real(bits), sin_pi(make_rational(k, N), bits) * 2L);
      total += BigComplex::exp_i_pi(Rational(-Integer(k) * k, Integer(2) * P * N), bits) * ratio;
    }
  }
  const Real scale = Real(1L, bits) / sqrt(Real(2 * P * N, bits));
  return BigComplex::exp_i_pi(Rational(1, 4), bits) * total * scale;
}

BigComplex extrapolate_to_zero(const std::vector<Real>& h, const std::vector<BigComplex>& f) {
  if (h.size() != f.size() || h.empty()) {
    throw std::invalid_argument("extrapolate_to_zero: mismatched samples");
  }
  std::vector<BigComplex> p = f;
  const std::size_t n = h.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      // Neville at x = 0: (h_{i+l} p_i - h_i p_{i+1}) / (h_{i+l} - h_i)
      const Real denom = h[i + level] - h[i];
      p[i] = (p[i] * h[i + level] - p[i + 1] * h[i]) / denom;
    }
  }
  return p[0];
}

Integer falling_factorial(const Integer& x, int n) {
  Integer out(1);
  for (int j = 0; j < n; ++j) {
    out *= x - j;
  }
  return out;
}

}  // namespace bwrt::oracle
