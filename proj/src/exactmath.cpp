#include "bwrt/exactmath.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bwrt {

UnimodularMatrix::UnimodularMatrix(long p_, long r_, long q_, long s_) : p(p_), r(r_), q(q_), s(s_) {
  if (p * s - r * q != 1) {
    throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
  }
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& b) const {
  return {p * b.p + r * b.q, p * b.r + r * b.s, q * b.p + s * b.q, q * b.r + s * b.s};
}

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) {
    return Rational(0);
  }
  return x - Rational(floor(x)) - Rational(1, 2);
}

Rational dedekind_sum(long b, long a) {
  if (a == 0) {
    throw std::invalid_argument("dedekind_sum: modulus must be nonzero");
  }
  const long m = std::labs(a);
  const long b_mod = ((b % m) + m) % m;
  // ((k/m)) = (2k - m)/(2m); ((kb/m)) = (2r - m)/(2m) with r = kb mod m, or 0.
  __int128 total = 0;
  for (long k = 1; k < m; ++k) {
    const long r = static_cast<long>((static_cast<__int128>(k) * b_mod) % m);
    if (r == 0) {
      continue;
    }
    total += static_cast<__int128>(2 * k - m) * (2 * r - m);
  }
  Integer numerator(0);
  const bool negative = total < 0;
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-total)
                                         : static_cast<unsigned __int128>(total);
  // Build the big integer from two 64-bit halves.
  numerator = Integer(static_cast<unsigned long long>(magnitude >> 64));
  numerator <<= 64;
  numerator += Integer(static_cast<unsigned long long>(magnitude));
  if (negative) {
    numerator = -numerator;
  }
  Rational result(numerator, Integer(4) * Integer(m) * Integer(m));
  return a < 0 ? Rational(-result) : result;
}

Rational rademacher_phi(const UnimodularMatrix& u) {
  if (u.q == 0) {
    return make_rational(u.r, u.s);
  }
  return make_rational(u.p + u.s, u.q) - 12 * dedekind_sum(u.p, u.q);
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) {
    return Integer(0);
  }
  Integer out(1);
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Integer factorial(long n) {
  Integer out(1);
  for (long i = 2; i <= n; ++i) {
    out *= i;
  }
  return out;
}

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0) {
    throw std::invalid_argument("bernoulli_numbers: n must be non-negative");
  }
  // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1, with B_1 = -1/2.
  std::vector<Rational> numbers(static_cast<std::size_t>(n) + 1);
  numbers[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 0; k < m; ++k) {
      acc += Rational(binomial(m + 1, k)) * numbers[static_cast<std::size_t>(k)];
    }
    numbers[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return numbers;
}

Rational bernoulli_polynomial(int n, const Rational& x, const std::vector<Rational>& numbers) {
  if (n < 0 || static_cast<std::size_t>(n) >= numbers.size()) {
    throw std::invalid_argument("bernoulli_polynomial: degree outside the supplied table");
  }
  // Horner in x over coefficients C(n,k) B_k of x^(n-k).
  Rational acc(0);
  for (int j = 0; j <= n; ++j) {
    // coefficient of x^(n-j)
    acc = acc * x + Rational(binomial(n, j)) * numbers[static_cast<std::size_t>(j)];
  }
  return acc;
}

Rational bernoulli_polynomial(int n, const Rational& x) {
  return bernoulli_polynomial(n, x, bernoulli_numbers(n));
}

std::vector<Integer> stirling_first_row(int n) {
  if (n < 0) {
    throw std::invalid_argument("stirling_first_row: n must be non-negative");
  }
  std::vector<Integer> coeffs{Integer(1)};
  for (int j = 0; j < n; ++j) {
    std::vector<Integer> next(coeffs.size() + 1, Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * j;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

Integer stirling_first(int n, int m) {
  if (n < 0 || m < 0 || m > n) {
    throw std::invalid_argument("stirling_first: need 0 <= m <= n");
  }
  return stirling_first_row(n)[static_cast<std::size_t>(m)];
}

BigComplex gauss_sum(long N, const PrecisionContext& ctx) {
  if (N < 1) {
    throw std::invalid_argument("gauss_sum: N must be positive");
  }
  BigComplex total(ctx.bits());
  for (long n = 0; n < 2 * N; ++n) {
    total += BigComplex::exp_i_pi(Rational(Integer(-n) * n, Integer(2 * N)), ctx.bits());
  }
  return total;
}

ReciprocitySides gauss_reciprocity(long N, long M, const Rational& k, const PrecisionContext& ctx) {
  if (N == 0 || M == 0) {
    throw std::invalid_argument("gauss_reciprocity: N and M must be nonzero");
  }
  if ((N * M) % 2 != 0) {
    throw std::invalid_argument("gauss_reciprocity: N*M must be even");
  }
  if (!is_integer(k * N)) {
    throw std::invalid_argument("gauss_reciprocity: N*k must be an integer");
  }
  const auto bits = ctx.bits();
  BigComplex lhs(bits);
  for (long n = 0; n < std::labs(N); ++n) {
    const Rational phase = Rational(Integer(M) * n * n, Integer(N)) + 2 * k * n;
    lhs += BigComplex::exp_i_pi(phase, bits);
  }
  BigComplex sum(bits);
  for (long n = 0; n < std::labs(M); ++n) {
    const Rational shifted = k + n;
    const Rational phase = -Rational(N) * shifted * shifted / M;
    sum += BigComplex::exp_i_pi(phase, bits);
  }
  const int sign = (N > 0) == (M > 0) ? 1 : -1;
  const Real scale = sqrt(Real(make_rational(std::labs(N), std::labs(M)), bits));
  BigComplex rhs = BigComplex::exp_i_pi(make_rational(sign, 4), bits) * sum * scale;
  return {std::move(lhs), std::move(rhs)};
}

namespace {

Real erfc_series(const Real& x, mpfr_prec_t bits) {
  // erf(x) = (2/sqrt(pi)) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!, all terms positive.
  const Real two_x2 = x * x * 2L;
  Real term = x;
  Real sum = x;
  Real eps = Real(1L, bits);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits), MPFR_RNDN);
  for (long n = 1;; ++n) {
    term *= two_x2;
    term /= 2 * n + 1;
    sum += term;
    if (abs(term) <= abs(sum) * eps) {
      break;
    }
  }
  const Real pi = Real::pi(bits);
  const Real erf = sum * exp(-(x * x)) * 2L / sqrt(pi);
  return Real(1L, bits) - erf;
}

Real erfc_continued_fraction(const Real& x, mpfr_prec_t bits) {
  // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), x > 0.
  Real eps = Real(1L, bits);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits), MPFR_RNDN);
  Real tiny = Real(1L, bits);
  mpfr_mul_2si(tiny.get(), tiny.get(), -4 * static_cast<long>(bits), MPFR_RNDN);
  Real f = x;
  Real c = f;
  Real d(bits);
  const Real one(1L, bits);
  for (long j = 1; j < 1'000'000; ++j) {
    const Real a = Real(make_rational(j, 2), bits);
    d = x + a * d;
    if (d.is_zero()) {
      d = tiny;
    }
    d = one / d;
    c = x + a / c;
    if (c.is_zero()) {
      c = tiny;
    }
    const Real delta = c * d;
    f *= delta;
    if (abs(delta - one) <= eps) {
      return exp(-(x * x)) / (sqrt(Real::pi(bits)) * f);
    }
  }
  throw PrecisionError("erfc: continued fraction did not converge");
}

}  // namespace

Real erfc(const Real& x, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 64;
  Real xw(bits);
  mpfr_set(xw.get(), x.get(), MPFR_RNDN);
  const Real three(3L, bits);
  Real result(bits);
  if (abs(xw) <= three) {
    result = erfc_series(xw, bits);
  } else if (xw.sign() > 0) {
    result = erfc_continued_fraction(xw, bits);
  } else {
    result = Real(2L, bits) - erfc_continued_fraction(-xw, bits);
  }
  Real out(ctx.bits());
  mpfr_set(out.get(), result.get(), MPFR_RNDN);
  return out;
}

long inverse_mod(long a, long m) {
  if (m < 1) {
    throw std::invalid_argument("inverse_mod: modulus must be positive");
  }
  long r0 = ((a % m) + m) % m;
  long r1 = m;
  long s0 = 1;
  long s1 = 0;
  while (r1 != 0) {
    const long q = r0 / r1;
    long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1 && m != 1) {
    throw std::invalid_argument("inverse_mod: arguments are not coprime");
  }
  return ((s0 % m) + m) % m;
}

std::array<long, 3> solve_seifert_q(const BrieskornTriple& p) {
  const long p1 = p[0];
  const long p2 = p[1];
  const long p3 = p[2];
  // Mod p1 and p2 only the first and second terms of q1 p2p3 + q2 p1p3 + q3 p1p2 = 1 survive.
  const long q1 = inverse_mod(p2 * p3, p1);
  const long q2 = inverse_mod(p1 * p3, p2);
  const long rest = 1 - q1 * p2 * p3 - q2 * p1 * p3;
  if (rest % (p1 * p2) != 0) {
    throw std::logic_error("solve_seifert_q: inconsistent residues");
  }
  return {q1, q2, rest / (p1 * p2)};
}

}  // namespace bwrt
