#include "dzeta/singularity.hpp"

#include <cmath>

namespace dzeta {

namespace {

// Sum loci s1 + s2 = value for value in {2, 1, 0, -2, -4, ..., >= -(l+2)}.
std::vector<long> sum_loci(unsigned l) {
  std::vector<long> loci{2, 1, 0};
  for (long v = -2; v >= -static_cast<long>(l) - 2; v -= 2) loci.push_back(v);
  return loci;
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

}  // namespace

std::string DiagonalSingularity::describe() const {
  if (kind == Kind::pole) {
    return "pole of order " + std::to_string(order) + " at s=" + location.to_string();
  }
  return "indeterminate point s=" + location.to_string();
}

std::optional<DiagonalSingularity> SingularityMap::diagonal_at(const Rational& s) {
  if (s == Rational(1)) return DiagonalSingularity{DiagonalSingularity::Kind::pole, s, 2};
  if (s == Rational(1, 2)) return DiagonalSingularity{DiagonalSingularity::Kind::pole, s, 1};
  if (is_integer(s) && s.sign() <= 0) {
    return DiagonalSingularity{DiagonalSingularity::Kind::indeterminate, s, 0};
  }
  return std::nullopt;
}

std::optional<DiagonalSingularity> SingularityMap::diagonal_near(const Complex& s, double radius) {
  double t = s.imag().to_double();
  if (std::fabs(t) > radius) return std::nullopt;
  double sigma = s.real().to_double();
  auto near = [&](double x) { return std::hypot(sigma - x, t) <= radius; };
  if (near(1.0)) return diagonal_at(Rational(1));
  if (near(0.5)) return diagonal_at(Rational(1, 2));
  if (sigma < radius) {
    double k = std::round(sigma);
    if (k <= 0 && near(k)) return diagonal_at(Rational(static_cast<long>(k)));
  }
  return std::nullopt;
}

std::vector<DiagonalSingularity> SingularityMap::diagonal_in_range(double lo, double hi) {
  std::vector<DiagonalSingularity> out;
  for (long k = static_cast<long>(std::ceil(lo)); k <= 0 && k <= hi; ++k) {
    out.push_back(*diagonal_at(Rational(k)));
  }
  if (lo <= 0.5 && 0.5 <= hi) out.push_back(*diagonal_at(Rational(1, 2)));
  if (lo <= 1.0 && 1.0 <= hi) out.push_back(*diagonal_at(Rational(1)));
  return out;
}

std::optional<std::string> SingularityMap::general_at(const Rational& s1, const Rational& s2,
                                                       unsigned l) {
  if (s2 == Rational(1)) return "s2=1";
  Rational sum = s1 + s2;
  for (long v : sum_loci(l)) {
    if (sum == Rational(v)) return "s1+s2=" + std::to_string(v);
  }
  return std::nullopt;
}

std::optional<std::string> SingularityMap::general_near(const Complex& s1, const Complex& s2,
                                                         double radius, unsigned l) {
  double s2_re = s2.real().to_double();
  double s2_im = s2.imag().to_double();
  if (std::hypot(s2_re - 1.0, s2_im) <= radius) return "s2=1";
  double sum_re = s1.real().to_double() + s2_re;
  double sum_im = s1.imag().to_double() + s2_im;
  for (long v : sum_loci(l)) {
    if (std::hypot(sum_re - static_cast<double>(v), sum_im) <= radius) {
      return "s1+s2=" + std::to_string(v);
    }
  }
  return std::nullopt;
}

}  // namespace dzeta
