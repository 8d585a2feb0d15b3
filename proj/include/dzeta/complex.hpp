#ifndef DZETA_COMPLEX_HPP
#define DZETA_COMPLEX_HPP

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "dzeta/real.hpp"

namespace dzeta {

/// Arbitrary-precision complex scalar s = re + i*im.
class Complex {
 public:
  Complex() = default;
  explicit Complex(Precision bits) : re_(bits), im_(bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, Precision bits) : re_(re, bits), im_(im, bits) {}
  Complex(const Complex& other, Precision bits) : re_(other.re_, bits), im_(other.im_, bits) {}

  /// Parses "a+bi", "a-bi", "a", "bi" with decimal a, b; j may stand for i.
  static Complex parse(std::string_view text, Precision bits);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }

  Precision precision() const { return std::max(re_.precision(), im_.precision()); }
  void round_to(Precision bits) {
    re_.round_to(bits);
    im_.round_to(bits);
  }

  std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }
  /// "a+bi" with `digits` significant digits per component.
  std::string to_string(int digits) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator+=(const Real& rhs) {
    re_ += rhs;
    return *this;
  }
  Complex& operator-=(const Real& rhs) {
    re_ -= rhs;
    return *this;
  }
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex& operator*=(long rhs);
  Complex& operator/=(long rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator+(Complex a, const Real& b) {
    a.re_ += b;
    return a;
  }
  friend Complex operator-(Complex a, const Real& b) {
    a.re_ -= b;
    return a;
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
/// Distance |a - b| in double; adequate for tolerances and grids.
double distance(const Complex& a, const Complex& b);

/// z <- z * w without temporaries; `scratch` must not alias z or w.
void mul_inplace(Complex& z, const Complex& w, Real& scratch_a, Real& scratch_b);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace dzeta

#endif  // DZETA_COMPLEX_HPP
