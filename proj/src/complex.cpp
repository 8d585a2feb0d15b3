#include "dzeta/complex.hpp"

#include <algorithm>
#include <cmath>

#include "dzeta/errors.hpp"

namespace dzeta {

namespace {

Real parse_imag_coefficient(std::string_view text, Precision bits) {
  if (text.empty() || text == "+") return Real(1L, bits);
  if (text == "-") return Real(-1L, bits);
  return Real::parse(text, bits);
}

}  // namespace

Complex Complex::parse(std::string_view text, Precision bits) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') {
    return Complex(Real::parse(s, bits), Real(bits));
  }
  s.pop_back();
  // Split at the last sign that is neither leading nor an exponent sign.
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return Complex(Real(bits), parse_imag_coefficient(s, bits));
  }
  return Complex(Real::parse(std::string_view(s).substr(0, split), bits),
                 parse_imag_coefficient(std::string_view(s).substr(split), bits));
}

std::string Complex::to_string(int digits) const {
  std::string re = re_.to_string(digits);
  std::string im = im_.to_string(digits);
  if (im.front() != '-') im = "+" + im;
  return re + im + "i";
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  *this = *this * rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex& Complex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  Precision bits = std::max(a.precision(), b.precision());
  Complex r(bits);
  Real t(bits);
  mpfr_mul(r.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
  mpfr_sub(r.re_.raw(), r.re_.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(r.im_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
  mpfr_add(r.im_.raw(), r.im_.raw(), t.raw(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  Precision bits = std::max(a.precision(), b.precision());
  Real den = norm(b);
  den.round_to(bits);
  Complex r = a * conj(b);
  r.round_to(bits);
  r /= den;
  return r;
}

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.raw(), z.real().raw(), z.imag().raw(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex exp(const Complex& z) {
  Precision bits = z.precision();
  Real mag = exp(Real(z.real(), bits));
  Complex r(bits);
  mpfr_sin_cos(r.imag().raw(), r.real().raw(), z.imag().raw(), MPFR_RNDN);
  r *= mag;
  return r;
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

double distance(const Complex& a, const Complex& b) {
  return abs(a - b).to_double();
}

void mul_inplace(Complex& z, const Complex& w, Real& ta, Real& tb) {
  // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
  mpfr_mul(ta.raw(), z.real().raw(), w.imag().raw(), MPFR_RNDN);
  mpfr_mul(tb.raw(), z.imag().raw(), w.real().raw(), MPFR_RNDN);
  mpfr_add(ta.raw(), ta.raw(), tb.raw(), MPFR_RNDN);
  mpfr_mul(tb.raw(), z.imag().raw(), w.imag().raw(), MPFR_RNDN);
  mpfr_mul(z.real().raw(), z.real().raw(), w.real().raw(), MPFR_RNDN);
  mpfr_sub(z.real().raw(), z.real().raw(), tb.raw(), MPFR_RNDN);
  mpfr_swap(z.imag().raw(), ta.raw());
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.to_string(std::min(digits_for_bits(z.precision()), 20));
}

}  // namespace dzeta
