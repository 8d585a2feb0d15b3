#ifndef DZETA_DOUBLE_ZETA_HPP
#define DZETA_DOUBLE_ZETA_HPP

#include "dzeta/complex.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/rational.hpp"
#include "dzeta/singularity.hpp"

namespace dzeta {

/// Truncation of the Euler-Maclaurin representation: `l` Bernoulli terms
/// and `N` remainder terms.
struct EvalParams {
  unsigned l = 10;
  unsigned N = 100;
  double guard_radius = kDefaultGuardRadius;
  /// Set when the pair comes from extrapolating the schedule past t = 800.
  bool extrapolated = false;

  /// Throws DomainError unless 1 <= l <= 20, N >= 10, guard_radius > 0.
  void validate() const;

  friend bool operator==(const EvalParams&, const EvalParams&) = default;
};

/// (l, N) by height: (10,100) below 400, (8,200) below 600, (8,300) below
/// 800, then N grows by 100 per 200 in t (flagged as extrapolated).
EvalParams em_params_for(double t);

/// Euler-Maclaurin remainder of sum_{k<=n} k^{-s} after l Bernoulli terms.
/// Working precision is raised by ceil((sigma+l+1) log10 n) + guard digits.
/// Throws PoleError near s = 1 and PrecisionError if the cancellation eats
/// into the requested digits anyway.
Complex phi_tail(unsigned n, const Complex& s, unsigned l, const PrecisionContext& ctx);

/// zeta_2(s1, s2) from the Euler-Maclaurin form truncated after N remainder
/// terms. Throws SingularityError naming the locus, DomainError when
/// Re(s1+s2) <= -l, PrecisionError from the remainder terms.
Complex double_zeta_em(const Complex& s1, const Complex& s2, const EvalParams& params,
                       const PrecisionContext& ctx);

/// zeta_2(s, s) = (zeta(s)^2 - zeta(2s)) / 2.
/// Throws PoleError near s = 1 or 1/2, IndeterminateError near s = 0, -1, ...
Complex double_zeta_diagonal(const Complex& s, const PrecisionContext& ctx,
                             double guard_radius = kDefaultGuardRadius);

/// d/ds zeta_2(s, s) = zeta(s) zeta'(s) - zeta'(2s). Same errors as
/// double_zeta_diagonal.
Complex diagonal_derivative(const Complex& s, const PrecisionContext& ctx,
                            double guard_radius = kDefaultGuardRadius);

/// Exact central value (zeta(-k)^2 - zeta(-2k)) / 2, the diagonal limit at s = -k.
Rational central_value(unsigned k);

/// Upper bound on |Z| in zeta_2(s,s) = 2^{-s}(1 + Z) at abscissa sigma > 1.
/// A value below 1 rules out zeros on that vertical line.
double zero_free_bound(double sigma);

/// Least sigma on the 1e-3 grid over (1, 50] with zero_free_bound < 1.
double zero_free_threshold();

namespace detail {

/// Throws the diagonal PoleError / IndeterminateError for s within `radius`.
void check_diagonal(const Complex& s, double radius);

/// Diagonal harmonic-product value at `working_digits`, no rounding.
Complex diagonal_at(const Complex& s, int working_digits);

}  // namespace detail

}  // namespace dzeta

#endif  // DZETA_DOUBLE_ZETA_HPP
