#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace bwrt {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long numerator, long denominator) {
  return Rational(Integer(numerator), Integer(denominator));
}

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// Greatest integer not exceeding x.
Integer floor(const Rational& x);

/// x reduced into the half-open window [0, modulus).
Rational mod(const Rational& x, long modulus);

/// x reduced into (-1/2, 1/2].
Rational centered_mod1(const Rational& x);

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

}  // namespace bwrt
