#include "bwrt/brieskorn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bwrt {

void validate_exponents(long a, long b, long c) {
  if (a < 2 || b < 2 || c < 2) {
    throw std::invalid_argument("each p_i must be at least 2");
  }
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw std::invalid_argument("p must be pairwise coprime");
  }
  if (a > BrieskornTriple::kMaxProduct / b || a * b > BrieskornTriple::kMaxProduct / c) {
    throw std::invalid_argument("p1*p2*p3 exceeds the supported maximum " +
                                std::to_string(BrieskornTriple::kMaxProduct));
  }
}

BrieskornTriple::BrieskornTriple(long a, long b, long c) : p_{a, b, c} {
  validate_exponents(a, b, c);
  std::sort(p_.begin(), p_.end());
  product_ = p_[0] * p_[1] * p_[2];
  dimension_ = (p_[0] - 1) * (p_[1] - 1) * (p_[2] - 1) / 4;
  const long pairwise = p_[0] * p_[1] + p_[0] * p_[2] + p_[1] * p_[2];
  poincare_ = pairwise > product_;
  if (poincare_ != (p_ == std::array<long, 3>{2, 3, 5})) {
    throw std::logic_error("unexpected spherical triple " + to_string());
  }
}

std::string BrieskornTriple::to_string() const {
  return "(" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," + std::to_string(p_[2]) + ")";
}

std::vector<BrieskornTriple> brieskorn_triples_up_to(long max_product) {
  std::vector<BrieskornTriple> out;
  for (long a = 2; a * (a + 1) * (a + 2) <= max_product; ++a) {
    for (long b = a + 1; a * b * (b + 1) <= max_product; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      for (long c = b + 1; a * b * c <= max_product; ++c) {
        if (std::gcd(a, c) == 1 && std::gcd(b, c) == 1) {
          out.emplace_back(a, b, c);
        }
      }
    }
  }
  return out;
}

}  // namespace bwrt
