#ifndef DZETA_VERIFICATION_HPP
#define DZETA_VERIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dzeta/complex.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/zero_search.hpp"

namespace dzeta {

/// Closed box sigma_lo <= sigma <= sigma_hi, t_lo <= t <= t_hi.
struct Rectangle {
  double sigma_lo;
  double sigma_hi;
  double t_lo;
  double t_hi;

  /// Throws DomainError on an empty box.
  void validate() const;
  /// Square of half-width `halfwidth` centred at (sigma, t).
  static Rectangle around(double sigma, double t, double halfwidth);
  /// Mirror image across the real axis.
  Rectangle conjugate() const { return {sigma_lo, sigma_hi, -t_hi, -t_lo}; }
};

/// Phase jumps between consecutive boundary samples are bisected below this.
inline constexpr double kMaxPhaseJump = 1.5707963267948966;
inline constexpr size_t kMaxWindingSamples = size_t{1} << 20;

/// Argument-principle count (#zeros - #poles, with multiplicity) of
/// zeta_2(s, s) inside `rect`. The positively oriented boundary is sampled
/// adaptively until every phase jump is below pi/2.
/// Throws BoundaryNearZero when the boundary comes within the guard radius
/// of a singular point or |zeta_2| drops below 10^(-digits+10) on it, and
/// NonConvergent past 2^20 samples.
int winding_number(const Rectangle& rect, const PrecisionContext& ctx,
                   const DiagonalFunction& f = DiagonalFunction());

inline constexpr double kSimpleZeroThreshold = 1e-6;
inline constexpr double kDefaultBoxHalfwidth = 1e-3;

/// Winding over the centred box plus the derivative test. Certified when
/// the winding is 1 and |zeta_2'| > 1e-6; a winding of 2 or more is
/// reported as a multiple zero or an unresolved pair.
ZeroRecord certify_zero(const ZeroRecord& record, double box_halfwidth, const PrecisionContext& ctx,
                        const DiagonalFunction& f = DiagonalFunction());

/// certify_zero over every record on `threads` workers. A box whose edge
/// meets a zero or singular point is retried at 0.7x and 1.3x the
/// half-width; if all fail the record stays uncertified with the error as
/// diagnostic.
std::vector<ZeroRecord> certify_all(const std::vector<ZeroRecord>& records, double box_halfwidth,
                                    const PrecisionContext& ctx, const DiagonalFunction& f = DiagonalFunction(),
                                    unsigned threads = 1);

struct AccuracyTrial {
  unsigned l;
  unsigned N;
  /// |s* - s^{l,N}|; NaN when refinement failed.
  double deviation;
  std::optional<Complex> location;
  std::string error;
};

struct AccuracyReport {
  Complex reference;
  std::vector<AccuracyTrial> trials;
};

/// For each (l, N), re-refines `zero` as a zero of the truncated
/// Euler-Maclaurin form and reports the distance to `zero`. Needs a
/// context of at least 100 digits. Failures are recorded per trial.
AccuracyReport cross_check(const Complex& zero, const std::vector<std::pair<unsigned, unsigned>>& schedules,
                           const PrecisionContext& ctx);

}  // namespace dzeta

#endif  // DZETA_VERIFICATION_HPP
