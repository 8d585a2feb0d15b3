#include "dzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dzeta/errors.hpp"

namespace dzeta {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

Precision max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Precision bits_for_digits(int digits) {
  return static_cast<Precision>(std::ceil(digits * kLog2Of10)) + 8;
}

int digits_for_bits(Precision bits) {
  return std::max(1, static_cast<int>(std::floor((bits - 8) / kLog2Of10)));
}

Real::Real(Precision bits) {
  mpfr_init2(value_, std::max<Precision>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, Precision bits) : Real(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, Precision bits) : Real(bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other, Precision bits) : Real(bits) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

// A moved-from Real has a null limb pointer and is only valid for assignment
// or destruction.
Real::Real(Real&& other) noexcept {
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::parse(std::string_view text, Precision bits) {
  std::string buf(text);
  Real r(bits);
  if (buf.empty()) throw DomainError("empty decimal literal");
  char* end = nullptr;
  mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (end != buf.c_str() + buf.size() || !mpfr_number_p(r.value_)) {
    throw DomainError("not a decimal number: '" + buf + "'");
  }
  return r;
}

Real Real::pi(Precision bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

void Real::round_to(Precision bits) { mpfr_prec_round(value_, bits, MPFR_RNDN); }

double Real::log10_abs() const {
  if (mpfr_zero_p(value_)) return -std::numeric_limits<double>::infinity();
  if (!mpfr_number_p(value_)) return std::numeric_limits<double>::infinity();
  long exponent = 0;
  double mant = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exponent) * std::log10(2.0);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  digits = std::max(digits, 1);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // Trailing zeros carry no information once the digit count is recorded.
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // Value is 0.mant * 10^exp10.
  long e = static_cast<long>(exp10);
  std::string out;
  if (e > -6 && e <= 21) {
    if (e <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else if (static_cast<size_t>(e) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) round_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) round_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) round_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) round_to(rhs.precision());
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

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(std::min(digits_for_bits(x.precision()), 20));
}

}  // namespace dzeta
