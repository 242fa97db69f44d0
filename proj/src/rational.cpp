#include "bwrt/rational.hpp"

#include <stdexcept>

namespace bwrt {

Integer floor(const Rational& x) {
  const Integer n = numerator_of(x);
  const Integer d = denominator_of(x);
  Integer q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) {
    q -= 1;
  }
  return q;
}

Rational mod(const Rational& x, long modulus) {
  if (modulus <= 0) {
    throw std::invalid_argument("mod: modulus must be positive");
  }
  const Rational scaled = x / modulus;
  return x - Rational(floor(scaled)) * modulus;
}

Rational centered_mod1(const Rational& x) {
  Rational r = mod(x, 1);
  if (r > Rational(1, 2)) {
    r -= 1;
  }
  return r;
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) {
    return numerator_of(x).str();
  }
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

std::string to_string(const Integer& x) { return x.str(); }

}  // namespace bwrt
