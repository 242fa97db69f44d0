#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bwrt {

/// Coefficients of tau_infinity in powers of (q - 1).
struct OhtsukiSeries {
  BrieskornTriple manifold;
  int order = 0;
  /// lambda_0..lambda_order.
  std::vector<Rational> lambdas;
  /// Non-fatal observations, e.g. a non-integral coefficient.
  std::vector<std::string> warnings;
};

/// Lambda_n(p) from Stirling numbers and L(-2k, chi^{(1,1,1)}), with the
/// (-1)^{n+1} correction for (2,3,5). Throws std::invalid_argument for order < 0.
OhtsukiSeries lambda_coefficients(const BrieskornTriple& p, int order);

/// Expands q^{phi/4-1/2}(q-1) sum_n lambda_n (q-1)^n and
///   (1/2) sum_k L(-2k)/k! (log q / 4P)^k  [+ q^{1/120} for (2,3,5)]
/// in x = q - 1 through x^{order+1} and returns the largest coefficient
/// difference, exactly. Correct lambdas give 0.
Rational tau_infinity_check(const BrieskornTriple& p, int order);
/// Same check for caller-supplied coefficients.
Rational tau_infinity_check(const BrieskornTriple& p, const std::vector<Rational>& lambdas);

struct Table1Row {
  BrieskornTriple manifold;
  std::vector<Integer> lambdas;
};

/// The golden table compiled into the library.
std::string_view embedded_table1_text();

/// Parses "p1 p2 p3 : l0 ... l8" rows; '#' comments and one "version N" line.
/// Throws std::invalid_argument with the offending line number on malformed input.
std::vector<Table1Row> parse_table1(std::string_view text);

/// The file named by BWRT_TABLE1_PATH if set, else the embedded table.
std::vector<Table1Row> load_table1();

struct Table1Mismatch {
  BrieskornTriple manifold;
  int n = 0;
  Integer expected;
  Rational got;
};

struct Table1Report {
  std::size_t rows = 0;
  std::size_t cells = 0;
  std::vector<Table1Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

Table1Report table1_verify(const std::vector<Table1Row>& rows);
Table1Report table1_verify();

}  // namespace bwrt
