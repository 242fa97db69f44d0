#include "bwrt/chi.hpp"

#include "bwrt/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwrt {

std::string EllTriple::to_string() const {
  return "(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + ")";
}

PeriodicChi::PeriodicChi(long modulus, std::vector<std::int8_t> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus_ <= 0 || static_cast<long>(values_.size()) != modulus_) {
    throw std::invalid_argument("PeriodicChi: table length must equal the modulus");
  }
  for (long n = 0; n < modulus_; ++n) {
    if (values_[static_cast<std::size_t>(n)] != 0) {
      support_.push_back(n);
    }
  }
}

void validate_triple(const BrieskornTriple& p, const EllTriple& ell) {
  for (std::size_t j = 0; j < 3; ++j) {
    if (ell.l[j] < 1 || ell.l[j] > p[j] - 1) {
      throw std::invalid_argument("triple " + ell.to_string() + " out of range for p = " + p.to_string());
    }
  }
}

PeriodicChi build_chi(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  const long P = p.product();
  const long modulus = 2 * P;
  std::array<long, 3> a{};
  for (std::size_t j = 0; j < 3; ++j) {
    a[j] = ell.l[j] * (P / p[j]);
  }
  std::vector<std::int8_t> values(static_cast<std::size_t>(modulus), 0);
  for (int mask = 0; mask < 8; ++mask) {
    long n = P;
    int parity = 1;
    for (std::size_t j = 0; j < 3; ++j) {
      const int eps = (mask >> j) & 1 ? -1 : 1;
      n += eps * a[j];
      parity *= eps;
    }
    n = ((n % modulus) + modulus) % modulus;
    auto& slot = values[static_cast<std::size_t>(n)];
    if (slot != 0) {
      throw std::logic_error("build_chi: sign assignments collide at residue " + std::to_string(n) +
                             " for p = " + p.to_string() + ", l = " + ell.to_string());
    }
    slot = parity == -1 ? 1 : -1;
  }
  return PeriodicChi(modulus, std::move(values));
}

std::array<EllTriple, 4> symmetry_orbit(const BrieskornTriple& p, const EllTriple& ell) {
  const auto& l = ell.l;
  return {make_triple(l[0], l[1], l[2]), make_triple(l[0], p[1] - l[1], p[2] - l[2]),
          make_triple(p[0] - l[0], l[1], p[2] - l[2]), make_triple(p[0] - l[0], p[1] - l[1], l[2])};
}

EllTriple canonicalize(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  const auto orbit = symmetry_orbit(p, ell);
  EllTriple least = *std::min_element(orbit.begin(), orbit.end());
  least.canonical = true;
  return least;
}

std::vector<EllTriple> enumerate_triples(const BrieskornTriple& p) {
  std::vector<EllTriple> out;
  out.reserve(static_cast<std::size_t>(p.dimension()));
  for (long a = 1; a < p[0]; ++a) {
    for (long b = 1; b < p[1]; ++b) {
      for (long c = 1; c < p[2]; ++c) {
        EllTriple ell = make_triple(a, b, c);
        if (canonicalize(p, ell) == ell) {
          ell.canonical = true;
          out.push_back(ell);
        }
      }
    }
  }
  if (static_cast<long>(out.size()) != p.dimension()) {
    throw std::logic_error("enumerate_triples: orbit count differs from D for p = " + p.to_string());
  }
  return out;
}

long weighted_sum(const PeriodicChi& chi) {
  long total = 0;
  for (long r : chi.support()) {
    const long n = r == 0 ? chi.modulus() : r;
    total += n * chi(r);
  }
  return total;
}

bool satisfies_ell_condition(const BrieskornTriple& p, const EllTriple& ell) {
  validate_triple(p, ell);
  const long P = p.product();
  const long a1 = ell.l[0] * (P / p[0]);
  const long a2 = ell.l[1] * (P / p[1]);
  const long a3 = ell.l[2] * (P / p[2]);
  const long total = a1 + a2 + a3;
  auto inside = [P](long v) { return -P < v && v < P; };
  return P < total && total < 3 * P && inside(a1 + a2 - a3) && inside(a1 - a2 + a3) && inside(-a1 + a2 + a3);
}

AdmissibleTriples admissible_triples(const BrieskornTriple& p) {
  AdmissibleTriples out;
  for (const auto& ell : enumerate_triples(p)) {
    if (satisfies_ell_condition(p, ell)) {
      out.triples.push_back(ell);
    }
  }
  out.gamma = static_cast<long>(out.triples.size());
  return out;
}

Rational gamma_closed_form(const BrieskornTriple& p) {
  const long p1 = p[0];
  const long p2 = p[1];
  const long p3 = p[2];
  const long P = p.product();
  const Rational dedekind = dedekind_sum(p1 * p2, p3) + dedekind_sum(p2 * p3, p1) + dedekind_sum(p1 * p3, p2);
  const Rational inv_sq = make_rational(1, p1 * p1) + make_rational(1, p2 * p2) + make_rational(1, p3 * p3);
  return dedekind + make_rational(P, 12) * (1 - inv_sq) - make_rational(1, 12 * P) + Rational(1, 4);
}

long mordell_count(const BrieskornTriple& p) {
  const long P = p.product();
  long count = 0;
  for (long a = 1; a < p[0]; ++a) {
    for (long b = 1; b < p[1]; ++b) {
      for (long c = 1; c < p[2]; ++c) {
        if (a * (P / p[0]) + b * (P / p[1]) + c * (P / p[2]) < P) {
          ++count;
        }
      }
    }
  }
  return count;
}

std::vector<Rational> l_function_values(const PeriodicChi& chi, int k_max) {
  if (k_max < 0) {
    throw std::invalid_argument("l_function_values: k must be non-negative");
  }
  long mean = 0;
  for (long r : chi.support()) {
    mean += chi(r);
  }
  if (mean != 0) {
    throw std::invalid_argument("l_function_value: periodic function must have mean zero");
  }
  const long f = chi.modulus();
  const auto numbers = bernoulli_numbers(2 * k_max + 1);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    Rational acc(0);
    for (long r : chi.support()) {
      const long j = r == 0 ? f : r;
      acc += chi(r) * bernoulli_polynomial(2 * k + 1, make_rational(j, f), numbers);
    }
    Integer scale(1);
    for (int i = 0; i < 2 * k; ++i) {
      scale *= f;
    }
    out.push_back(-Rational(scale) / (2 * k + 1) * acc);
  }
  return out;
}

Rational l_function_value(const PeriodicChi& chi, int k) { return l_function_values(chi, k).back(); }

long LaurentSeries::coefficient(long exponent) const {
  const long idx = exponent - min_exponent;
  if (idx < 0 || idx >= static_cast<long>(coefficients.size())) {
    return 0;
  }
  return coefficients[static_cast<std::size_t>(idx)];
}

LaurentSeries generating_series_laurent(const BrieskornTriple& p, long truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("generating_series: truncation must be at least 1");
  }
  const long P = p.product();
  const std::array<long, 3> x{p[0] * p[1], p[1] * p[2], p[0] * p[2]};
  // Multiply through by z^P: F = -z^P prod(z^x - z^-x) sum_{k>=0} z^{2Pk}.
  LaurentSeries series;
  series.min_exponent = P - (x[0] + x[1] + x[2]);
  const long length = truncation - series.min_exponent + 1;
  series.coefficients.assign(static_cast<std::size_t>(std::max(length, 0L)), 0);
  for (int mask = 0; mask < 8; ++mask) {
    long exponent = P;
    long sign = -1;
    for (std::size_t j = 0; j < 3; ++j) {
      if ((mask >> j) & 1) {
        exponent -= x[j];
        sign = -sign;
      } else {
        exponent += x[j];
      }
    }
    for (long e = exponent; e <= truncation; e += 2 * P) {
      series.coefficients[static_cast<std::size_t>(e - series.min_exponent)] += sign;
    }
  }
  return series;
}

std::vector<long> generating_series(const BrieskornTriple& p, long truncation) {
  const LaurentSeries series = generating_series_laurent(p, truncation);
  std::vector<long> out(static_cast<std::size_t>(truncation) + 1, 0);
  for (long n = 0; n <= truncation; ++n) {
    out[static_cast<std::size_t>(n)] = series.coefficient(n);
  }
  if (p.is_poincare()) {
    if (series.coefficient(-1) != 1 || series.min_exponent != -1) {
      throw std::logic_error("generating_series: unexpected polar part for (2,3,5)");
    }
    out[1] -= 1;
  } else if (series.min_exponent < 1) {
    throw std::logic_error("generating_series: unexpected polar part for " + p.to_string());
  }
  return out;
}

}  // namespace bwrt
