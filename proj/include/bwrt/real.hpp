#pragma once

#include "bwrt/rational.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwrt {

/// Raised when a quantity that must be an exact integer (e.g. a spectral
/// flow assembled from cotangent sums) does not land within tolerance of one.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own precision in bits; binary operations produce a
/// result at the larger of the two operand precisions. There is no global or
/// thread-local default precision, so values built from the same
/// PrecisionContext behave identically on any thread.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const Integer& value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(std::string_view decimal, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer; throws if out of long range.
  long round_to_long() const;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  static Real pi(mpfr_prec_t bits);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cot(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/// MPFR's correctly rounded erfc; used as a reference, not on hot paths.
Real erfc_reference(const Real& x);

/// sin(pi * r) and cos(pi * r) with r reduced modulo 2 exactly first.
Real sin_pi(const Rational& r, mpfr_prec_t bits);
Real cos_pi(const Rational& r, mpfr_prec_t bits);
/// Exact sign of sin(pi * r): -1, 0 or +1.
int sin_pi_sign(const Rational& r);

/// Decimal precision configuration threaded through every floating computation.
///
/// Values are computed with `kGuardDigits` extra decimal digits; comparisons use
/// tolerance 10^-(decimal_digits - 10).
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kMinDigits = 15;
  static constexpr int kGuardDigits = 20;

  explicit PrecisionContext(int decimal_digits = kDefaultDigits);

  int decimal_digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return bits_; }
  int tolerance_exponent() const noexcept { return digits_ - 10; }
  Real tolerance() const;
  /// 10^-exponent at this context's working precision.
  Real power_of_ten(int exponent) const;
  Real zero() const { return Real(bits_); }
  Real from(long v) const { return Real(v, bits_); }
  Real from(const Rational& v) const { return Real(v, bits_); }
  Real pi() const { return Real::pi(bits_); }

 private:
  int digits_;
  mpfr_prec_t bits_;
};

/// Complex number with Real components.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t bits = 64);
  BigComplex(Real re, Real im);
  explicit BigComplex(Real re);

  /// exp(i * pi * r), with r reduced modulo 2 exactly.
  static BigComplex exp_i_pi(const Rational& r, mpfr_prec_t bits);
  /// exp(i * theta).
  static BigComplex polar(const Real& modulus, const Real& theta);

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  mpfr_prec_t precision() const noexcept;

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const Real& rhs);
  BigComplex& operator/=(const Real& rhs);
  BigComplex operator-() const;

  BigComplex conj() const;
  Real abs() const;
  Real arg() const;
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

 private:
  Real re_;
  Real im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const Real& b);
BigComplex operator*(const Real& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const Real& b);

Real abs(const BigComplex& z);
/// Principal branches throughout.
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const Real& exponent);

}  // namespace bwrt
