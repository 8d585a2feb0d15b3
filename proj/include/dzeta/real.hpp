#ifndef DZETA_REAL_HPP
#define DZETA_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace dzeta {

using Precision = mpfr_prec_t;

/// Binary precision holding `digits` significant decimal digits.
Precision bits_for_digits(int digits);
int digits_for_bits(Precision bits);

/// RAII owner of an mpfr_t. Every Real carries its own precision; binary
/// operators produce a result at the larger of the operand precisions.
class Real {
 public:
  Real() : Real(Precision{64}) {}
  explicit Real(Precision bits);
  Real(double value, Precision bits);
  Real(long value, Precision bits);
  Real(int value, Precision bits) : Real(static_cast<long>(value), bits) {}
  /// Copy of `other` rounded to `bits`.
  Real(const Real& other, Precision bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal ("-0.8303721", "1e-6"). Throws DomainError.
  static Real parse(std::string_view text, Precision bits);
  static Real pi(Precision bits);

  Precision precision() const { return mpfr_get_prec(value_); }
  /// Rounds in place to `bits`.
  void round_to(Precision bits);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x| without overflow or underflow; -inf for zero.
  double log10_abs() const;
  /// Decimal representation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// to_string() at the digit count the precision can hold.
  std::string to_string() const { return to_string(digits_for_bits(precision())); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace dzeta

#endif  // DZETA_REAL_HPP
