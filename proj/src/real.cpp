#include "bwrt/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace bwrt {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

void set_rational(mpfr_ptr out, const Rational& value) {
  mpfr_set_q(out, value.backend().data(), MPFR_RNDN);
}

}  // namespace

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  set_rational(value_, value);
}

Real::Real(std::string_view decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  const std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("Real: cannot parse '" + text + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) {
    mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  }
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) {
    mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  }
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) {
    mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  }
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) {
    mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  }
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

long Real::round_to_long() const {
  if (!is_finite() || !mpfr_fits_slong_p(value_, MPFR_RNDN)) {
    throw std::overflow_error("Real::round_to_long: value out of range");
  }
  return mpfr_get_si(value_, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) {
    return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  }
  if (is_zero()) {
    return "0";
  }
  const int n = std::max(digits, 1);
  const std::string format = "%." + std::to_string(n - 1) + "Re";
  const int len = mpfr_snprintf(nullptr, 0, format.c_str(), value_);
  std::vector<char> buffer(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), format.c_str(), value_);
  return std::string(buffer.data(), static_cast<std::size_t>(len));
}

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.get(), a.get(), b, MPFR_RNDN);
  return out;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.get(), a.get(), b, MPFR_RNDN);
  return out;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

#define BWRT_UNARY(name, fn)                           \
  Real name(const Real& x) {                           \
    Real out(x.precision());                           \
    fn(out.get(), x.get(), MPFR_RNDN);                 \
    return out;                                        \
  }

BWRT_UNARY(abs, mpfr_abs)
BWRT_UNARY(sqrt, mpfr_sqrt)
BWRT_UNARY(exp, mpfr_exp)
BWRT_UNARY(log, mpfr_log)
BWRT_UNARY(sin, mpfr_sin)
BWRT_UNARY(cos, mpfr_cos)
BWRT_UNARY(cot, mpfr_cot)
BWRT_UNARY(erfc_reference, mpfr_erfc)

#undef BWRT_UNARY

Real atan2(const Real& y, const Real& x) {
  Real out(max_prec(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real sin_pi(const Rational& r, mpfr_prec_t bits) {
  const Rational reduced = mod(r, 2);
  if (is_integer(reduced)) {
    return Real(bits);
  }
  Real angle = Real::pi(bits) * Real(reduced, bits);
  return sin(angle);
}

Real cos_pi(const Rational& r, mpfr_prec_t bits) {
  const Rational reduced = mod(r, 2);
  if (reduced == Rational(1, 2) || reduced == Rational(3, 2)) {
    return Real(bits);
  }
  Real angle = Real::pi(bits) * Real(reduced, bits);
  return cos(angle);
}

int sin_pi_sign(const Rational& r) {
  const Rational reduced = mod(r, 2);
  if (is_integer(reduced)) {
    return 0;
  }
  return reduced < 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// PrecisionContext

PrecisionContext::PrecisionContext(int decimal_digits) : digits_(decimal_digits) {
  if (decimal_digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) +
                                " decimal digits");
  }
  const double bits = std::ceil((decimal_digits + kGuardDigits) * 3.3219280948873623);
  bits_ = static_cast<mpfr_prec_t>(bits);
}

Real PrecisionContext::tolerance() const { return power_of_ten(tolerance_exponent()); }

Real PrecisionContext::power_of_ten(int exponent) const {
  Real out(bits_);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(std::abs(exponent)), MPFR_RNDN);
  if (exponent > 0) {
    mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex::BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}

BigComplex::BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

BigComplex::BigComplex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

BigComplex BigComplex::exp_i_pi(const Rational& r, mpfr_prec_t bits) {
  return BigComplex(cos_pi(r, bits), sin_pi(r, bits));
}

BigComplex BigComplex::polar(const Real& modulus, const Real& theta) {
  return BigComplex(modulus * cos(theta), modulus * sin(theta));
}

mpfr_prec_t BigComplex::precision() const noexcept { return std::max(re_.precision(), im_.precision()); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const Real denom = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  Real im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

Real BigComplex::abs() const {
  Real out(precision());
  mpfr_hypot(out.get(), re_.get(), im_.get(), MPFR_RNDN);
  return out;
}

Real BigComplex::arg() const { return atan2(im_, re_); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  BigComplex out(a);
  out += b;
  return out;
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  BigComplex out(a);
  out -= b;
  return out;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex out(a);
  out *= b;
  return out;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigComplex out(a);
  out /= b;
  return out;
}

BigComplex operator*(const BigComplex& a, const Real& b) {
  BigComplex out(a);
  out *= b;
  return out;
}

BigComplex operator*(const Real& a, const BigComplex& b) { return b * a; }

BigComplex operator/(const BigComplex& a, const Real& b) {
  BigComplex out(a);
  out /= b;
  return out;
}

Real abs(const BigComplex& z) { return z.abs(); }

BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.real()), z.imag()); }

BigComplex log(const BigComplex& z) { return BigComplex(log(z.abs()), z.arg()); }

BigComplex sqrt(const BigComplex& z) {
  if (z.real().is_zero() && z.imag().is_zero()) {
    return BigComplex(z.precision());
  }
  const Real half(Rational(1, 2), z.precision());
  return BigComplex::polar(sqrt(z.abs()), z.arg() * half);
}

BigComplex pow(const BigComplex& z, const Real& exponent) {
  if (z.real().is_zero() && z.imag().is_zero()) {
    return BigComplex(z.precision());
  }
  return exp(log(z) * exponent);
}

}  // namespace bwrt
