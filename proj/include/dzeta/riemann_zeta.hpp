#ifndef DZETA_RIEMANN_ZETA_HPP
#define DZETA_RIEMANN_ZETA_HPP

#include "dzeta/complex.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/rational.hpp"

namespace dzeta {

/// Euler-Maclaurin parameters for one zeta evaluation: the partial sum runs
/// to `cutoff - 1`, followed by at most `expansion_terms` Bernoulli terms.
struct ZetaEvalPolicy {
  unsigned cutoff;
  unsigned expansion_terms;

  /// cutoff = max(20, ceil(0.7 p) + ceil(|t|/2), ceil(|t|)) with p the
  /// working digit count; expansion_terms covers p digits and sigma < 0.
  static ZetaEvalPolicy for_point(const Complex& s, int working_digits);
};

/// Radius of the excluded disk around s = 1.
inline constexpr double kZetaPoleGuard = 1e-6;

/// Riemann zeta at any s off the pole. Throws PoleError for |s - 1| <= 1e-6.
Complex zeta(const Complex& s, const PrecisionContext& ctx);

/// Exact zeta(-k) = -B_{k+1}/(k+1); zeta(0) = -1/2.
Rational zeta_at_negative_integer(unsigned k);

/// zeta'(s) by a central difference with step 10^(-digits/2), evaluated with
/// enough extra digits to absorb the step's cancellation.
/// Throws PoleError for |s - 1| <= 1e-3.
Complex zeta_derivative(const Complex& s, const PrecisionContext& ctx);

namespace detail {

/// zeta(s) carried at `bits` with no rounding afterwards; no pole check.
Complex zeta_at_bits(const Complex& s, Precision bits);

/// zeta'(s) for a caller already working at `working_digits`.
Complex zeta_derivative_at(const Complex& s, int digits, int working_digits);

}  // namespace detail

}  // namespace dzeta

#endif  // DZETA_RIEMANN_ZETA_HPP
