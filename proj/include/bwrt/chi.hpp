#pragma once

#include "bwrt/brieskorn.hpp"
#include "bwrt/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bwrt {

/// Lattice triple (l1, l2, l3) with 1 <= l_j <= p_j - 1.
struct EllTriple {
  std::array<long, 3> l{};
  /// Set when this is the lexicographically least member of its symmetry orbit.
  bool canonical = false;

  long operator[](std::size_t i) const noexcept { return l[i]; }
  std::string to_string() const;

  friend bool operator==(const EllTriple& a, const EllTriple& b) { return a.l == b.l; }
  friend auto operator<=>(const EllTriple& a, const EllTriple& b) { return a.l <=> b.l; }
};

inline EllTriple make_triple(long a, long b, long c) { return EllTriple{{a, b, c}, false}; }

/// Odd periodic sign function of period 2P.
class PeriodicChi {
 public:
  PeriodicChi(long modulus, std::vector<std::int8_t> values);

  long modulus() const noexcept { return modulus_; }
  /// chi(n) for any integer n.
  int operator()(long n) const noexcept {
    long r = n % modulus_;
    if (r < 0) {
      r += modulus_;
    }
    return values_[static_cast<std::size_t>(r)];
  }
  std::span<const std::int8_t> values() const noexcept { return values_; }
  /// Residues in [0, modulus) with nonzero value, ascending.
  const std::vector<long>& support() const noexcept { return support_; }

  friend bool operator==(const PeriodicChi& a, const PeriodicChi& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  long modulus_;
  std::vector<std::int8_t> values_;
  std::vector<long> support_;
};

/// Throws std::invalid_argument unless 1 <= l_j <= p_j - 1.
void validate_triple(const BrieskornTriple& p, const EllTriple& ell);

/// chi(n) = +1 at n = P(1 + sum eps_j l_j/p_j) mod 2P with eps1 eps2 eps3 = -1,
/// -1 when the product is +1, 0 elsewhere.
PeriodicChi build_chi(const BrieskornTriple& p, const EllTriple& ell);

/// The four-element orbit {l, (l1,p2-l2,p3-l3), (p1-l1,l2,p3-l3), (p1-l1,p2-l2,l3)}.
std::array<EllTriple, 4> symmetry_orbit(const BrieskornTriple& p, const EllTriple& ell);

/// Lexicographic minimum of the symmetry orbit, flagged canonical.
EllTriple canonicalize(const BrieskornTriple& p, const EllTriple& ell);

/// The D canonical representatives, ascending.
std::vector<EllTriple> enumerate_triples(const BrieskornTriple& p);

/// sum_{n=1}^{2P} n chi(n); always 0 or 4P.
long weighted_sum(const PeriodicChi& chi);

/// The open-tetrahedron inequalities
///   1 < sum l_j/p_j < 3 and -1 < l_i/p_i + l_j/p_j - l_k/p_k < 1.
bool satisfies_ell_condition(const BrieskornTriple& p, const EllTriple& ell);

struct AdmissibleTriples {
  std::vector<EllTriple> triples;
  long gamma = 0;
};

/// Canonical triples satisfying the tetrahedron inequalities, and their count.
AdmissibleTriples admissible_triples(const BrieskornTriple& p);

/// Closed form of the admissible count in terms of Dedekind sums.
Rational gamma_closed_form(const BrieskornTriple& p);

/// Lattice points 0 < l_k < p_k with sum l_j/p_j < 1, by direct enumeration.
long mordell_count(const BrieskornTriple& p);

/// L(-2k, chi) = -(2P)^{2k}/(2k+1) sum_{j=1}^{2P} chi(j) B_{2k+1}(j/2P).
/// Throws std::invalid_argument if chi does not have mean zero.
Rational l_function_value(const PeriodicChi& chi, int k);

/// L(-2k, chi) for k = 0..k_max, sharing one Bernoulli table.
std::vector<Rational> l_function_values(const PeriodicChi& chi, int k_max);

/// Power-series coefficients of
///   prod_{x in {p1p2, p2p3, p1p3}} (z^x - z^-x) / (z^P - z^-P)
/// as a Laurent series about z = 0.
struct LaurentSeries {
  long min_exponent = 0;
  /// coefficients[i] is the coefficient of z^(min_exponent + i).
  std::vector<long> coefficients;

  long coefficient(long exponent) const;
};

LaurentSeries generating_series_laurent(const BrieskornTriple& p, long truncation);

/// Coefficients of z^0..z^truncation in the chi form: for non-Poincaré p these
/// are chi^{(1,1,1)}(n) directly; for (2,3,5) the extra 1/z + z is removed first.
std::vector<long> generating_series(const BrieskornTriple& p, long truncation);

}  // namespace bwrt
