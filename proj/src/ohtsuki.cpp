#include "bwrt/ohtsuki.hpp"

#include "bwrt/chi.hpp"
#include "bwrt/exactmath.hpp"
#include "bwrt/topology.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bwrt {

namespace {

using Series = std::vector<Rational>;  // coefficients of x^0..x^degree

Series multiply(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// (1 + x)^e
Series binomial_series(const Rational& e, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  out[0] = 1;
  for (std::size_t j = 1; j <= degree; ++j) {
    out[j] = out[j - 1] * (e - static_cast<long>(j) + 1) / static_cast<long>(j);
  }
  return out;
}

// log(1 + x)
Series log_series(std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t k = 1; k <= degree; ++k) {
    out[k] = make_rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  }
  return out;
}

}  // namespace

OhtsukiSeries lambda_coefficients(const BrieskornTriple& p, int order) {
  if (order < 0) {
    throw std::invalid_argument("lambda_coefficients: order must be non-negative");
  }
  const long P = p.product();
  const Rational phi = phi_invariant(p);
  const Rational a = (2 - phi) / 4;
  const Rational b = 1 / (P * (2 - phi));
  const auto L = l_function_values(build_chi(p, make_triple(1, 1, 1)), order + 1);

  OhtsukiSeries out{p, order, {}, {}};
  for (int n = 0; n <= order; ++n) {
    const auto stirling = stirling_first_row(n + 1);
    Rational total(0);
    Rational a_power(1);
    for (int m = 1; m <= n + 1; ++m) {
      a_power *= a;
      Rational inner(0);
      Rational b_power(1);
      for (int k = 0; k <= m; ++k) {
        inner += Rational(binomial(m, k)) * b_power * L[static_cast<std::size_t>(k)];
        b_power *= b;
      }
      total += Rational(stirling[static_cast<std::size_t>(m)]) * a_power * inner;
    }
    Rational lambda = total / (2 * Rational(factorial(n + 1)));
    if (p.is_poincare()) {
      lambda += n % 2 == 0 ? -1 : 1;
    }
    if (!is_integer(lambda)) {
      out.warnings.push_back("lambda_" + std::to_string(n) + " = " + to_string(lambda) + " is not an integer");
    }
    out.lambdas.push_back(std::move(lambda));
  }
  return out;
}

Rational tau_infinity_check(const BrieskornTriple& p, const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) {
    throw std::invalid_argument("tau_infinity_check: need at least lambda_0");
  }
  const std::size_t degree = lambdas.size();  // x^0..x^{order+1}
  const long P = p.product();
  const Rational exponent = phi_invariant(p) / 4 - Rational(1, 2);

  Series shifted(degree + 1, Rational(0));
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    shifted[n + 1] = lambdas[n];
  }
  const Series lhs = multiply(binomial_series(exponent, degree), shifted, degree);

  const auto L = l_function_values(build_chi(p, make_triple(1, 1, 1)), static_cast<int>(degree));
  const Series log_q = log_series(degree);
  Series rhs(degree + 1, Rational(0));
  Series power(degree + 1, Rational(0));
  power[0] = 1;
  Rational scale(1);
  for (std::size_t k = 0; k <= degree; ++k) {
    const Rational c = L[k] * scale / (2 * Rational(factorial(static_cast<long>(k))));
    for (std::size_t j = 0; j <= degree; ++j) {
      rhs[j] += c * power[j];
    }
    power = multiply(power, log_q, degree);
    scale /= 4 * P;
  }
  if (p.is_poincare()) {
    const Series extra = binomial_series(Rational(1, 120), degree);
    for (std::size_t j = 0; j <= degree; ++j) {
      rhs[j] += extra[j];
    }
  }

  Rational worst(0);
  for (std::size_t j = 0; j <= degree; ++j) {
    const Rational d = abs(lhs[j] - rhs[j]);
    if (d > worst) {
      worst = d;
    }
  }
  return worst;
}

Rational tau_infinity_check(const BrieskornTriple& p, int order) {
  return tau_infinity_check(p, lambda_coefficients(p, order).lambdas);
}

std::vector<Table1Row> parse_table1(std::string_view text) {
  std::vector<Table1Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool seen_version = false;
  auto fail = [&line_no](const std::string& why) {
    throw std::invalid_argument("table1 line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    if (line.compare(first, 7, "version") == 0) {
      std::string word;
      int version = 0;
      if (seen_version || !(fields >> word >> version) || version != 1) {
        fail("expected a single 'version 1' line");
      }
      seen_version = true;
      continue;
    }
    long a = 0;
    long b = 0;
    long c = 0;
    std::string colon;
    if (!(fields >> a >> b >> c >> colon) || colon != ":") {
      fail("expected 'p1 p2 p3 :'");
    }
    std::vector<Integer> lambdas;
    std::string token;
    while (fields >> token) {
      try {
        lambdas.emplace_back(token);
      } catch (const std::exception&) {
        fail("malformed integer '" + token + "'");
      }
    }
    if (lambdas.size() != 9) {
      fail("expected 9 coefficients, found " + std::to_string(lambdas.size()));
    }
    try {
      rows.push_back({BrieskornTriple(a, b, c), std::move(lambdas)});
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!seen_version) {
    throw std::invalid_argument("table1: missing version line");
  }
  return rows;
}

std::vector<Table1Row> load_table1() {
  if (const char* path = std::getenv("BWRT_TABLE1_PATH"); path != nullptr && *path != '\0') {
    std::ifstream file(path);
    if (!file) {
      throw std::invalid_argument(std::string("cannot read BWRT_TABLE1_PATH file ") + path);
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_table1(buffer.str());
  }
  return parse_table1(embedded_table1_text());
}

Table1Report table1_verify(const std::vector<Table1Row>& rows) {
  Table1Report report;
  report.rows = rows.size();
  for (const auto& row : rows) {
    const int order = static_cast<int>(row.lambdas.size()) - 1;
    const auto series = lambda_coefficients(row.manifold, order);
    for (int n = 0; n <= order; ++n) {
      ++report.cells;
      const Rational& got = series.lambdas[static_cast<std::size_t>(n)];
      const Integer& expected = row.lambdas[static_cast<std::size_t>(n)];
      if (got != Rational(expected)) {
        report.mismatches.push_back({row.manifold, n, expected, got});
      }
    }
  }
  return report;
}

Table1Report table1_verify() { return table1_verify(load_table1()); }

}  // namespace bwrt
