#ifndef DZETA_SINGULARITY_HPP
#define DZETA_SINGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "dzeta/complex.hpp"
#include "dzeta/rational.hpp"

namespace dzeta {

/// Default exclusion radius around every singular locus.
inline constexpr double kDefaultGuardRadius = 1e-6;

/// A singular point of the diagonal restriction s -> zeta_2(s, s).
struct DiagonalSingularity {
  enum class Kind { pole, indeterminate };

  Kind kind;
  Rational location;
  /// Pole order; 0 for indeterminate points.
  int order;

  /// "pole of order 2 at s=1", "indeterminate point s=-3", ...
  std::string describe() const;
};

/// Where zeta_2(s1, s2) fails to be holomorphic: s2 = 1 and
/// s1 + s2 in {2, 1, 0, -2, -4, ...}. On the diagonal these meet at the
/// poles s = 1 (order 2), s = 1/2 (order 1) and the indeterminate points
/// s = 0, -1, -2, ...
class SingularityMap {
 public:
  /// Exact membership for a rational diagonal point.
  static std::optional<DiagonalSingularity> diagonal_at(const Rational& s);

  /// The diagonal singularity within `radius` of s, if any.
  static std::optional<DiagonalSingularity> diagonal_near(const Complex& s, double radius);

  /// Diagonal singularities with lo <= s <= hi on the real axis, ascending.
  static std::vector<DiagonalSingularity> diagonal_in_range(double lo, double hi);

  /// Name of the general locus ("s2=1", "s1+s2=-2", ...) exactly containing
  /// the rational pair. Sum loci are listed down to -(l+2).
  static std::optional<std::string> general_at(const Rational& s1, const Rational& s2, unsigned l);

  /// Name of the general locus within `radius` of (s1, s2), if any.
  static std::optional<std::string> general_near(const Complex& s1, const Complex& s2, double radius,
                                                 unsigned l);
};

}  // namespace dzeta

#endif  // DZETA_SINGULARITY_HPP
