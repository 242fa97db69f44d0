#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace bwrt {

/// Validated exponents (p1, p2, p3) of a Brieskorn homology sphere.
///
/// Stored sorted ascending. Construction rejects p_i < 2 and non-coprime
/// inputs with std::invalid_argument.
class BrieskornTriple {
 public:
  /// Largest supported product; the periodic-function tables are dense in 2P.
  static constexpr long kMaxProduct = 5'000'000;

  BrieskornTriple(long a, long b, long c);

  const std::array<long, 3>& exponents() const noexcept { return p_; }
  long operator[](std::size_t i) const noexcept { return p_[i]; }

  /// P = p1 p2 p3.
  long product() const noexcept { return product_; }
  /// D = (p1-1)(p2-1)(p3-1)/4, the number of independent periodic functions.
  long dimension() const noexcept { return dimension_; }
  /// True exactly for (2,3,5), the only case with 1/p1 + 1/p2 + 1/p3 > 1.
  bool is_poincare() const noexcept { return poincare_; }

  /// "(p1,p2,p3)".
  std::string to_string() const;

  friend bool operator==(const BrieskornTriple& a, const BrieskornTriple& b) { return a.p_ == b.p_; }
  friend auto operator<=>(const BrieskornTriple& a, const BrieskornTriple& b) { return a.p_ <=> b.p_; }

 private:
  std::array<long, 3> p_;
  long product_;
  long dimension_;
  bool poincare_;
};

/// Throws std::invalid_argument with a user-facing message if (a,b,c) is not
/// a valid Brieskorn triple.
void validate_exponents(long a, long b, long c);

/// All sorted pairwise-coprime triples 2 <= p1 < p2 < p3 with p1 p2 p3 <= max_product.
std::vector<BrieskornTriple> brieskorn_triples_up_to(long max_product);

}  // namespace bwrt
