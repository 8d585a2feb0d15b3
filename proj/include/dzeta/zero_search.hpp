#ifndef DZETA_ZERO_SEARCH_HPP
#define DZETA_ZERO_SEARCH_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dzeta/complex.hpp"
#include "dzeta/double_zeta.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {

enum class Method { harmonic_product, euler_maclaurin };

std::string_view to_string(Method m);
/// Accepts "harmonic_product"/"hp" and "euler_maclaurin"/"em".
Method method_from_string(std::string_view name);

/// The function whose zeros are searched: the diagonal zeta_2(s, s) by
/// either evaluation route. Euler-Maclaurin parameters follow
/// em_params_for(t) unless fixed explicitly.
class DiagonalFunction {
 public:
  explicit DiagonalFunction(Method method = Method::harmonic_product,
                            std::optional<EvalParams> params = std::nullopt,
                            double guard_radius = kDefaultGuardRadius);

  Complex operator()(const Complex& s, const PrecisionContext& ctx) const;
  /// Analytic derivative of the harmonic-product form.
  Complex derivative(const Complex& s, const PrecisionContext& ctx) const;

  Method method() const { return method_; }
  double guard_radius() const { return guard_radius_; }
  /// Parameters used at height t; nullopt for the harmonic product.
  std::optional<EvalParams> params_at(double t) const;

 private:
  Method method_;
  std::optional<EvalParams> params_;
  double guard_radius_;
};

struct ScanConfig {
  double sigma_lo = -1.0;
  double sigma_hi = 2.0;
  double sigma_step = 0.01;
  double t_lo = 2.0;
  double t_hi = 60.0;
  double t_step = 0.05;
  /// Bound on |f| / |f'| at a line minimum, in units of s.
  double candidate_threshold = 0.5;
  double dedupe_radius = 1e-6;
  /// Precision of the grid evaluations; refinement uses the caller's context.
  int scan_digits = 16;
  unsigned threads = 1;

  /// Throws DomainError on empty ranges or non-positive steps.
  void validate() const;
};

/// A candidate: grid point of locally minimal |zeta_2(s, s)|.
struct Seed {
  double sigma;
  double t;
  double modulus;
};

/// |zeta_2| sampled along one vertical line; guarded points hold NaN.
struct LineProfile {
  double sigma = 0;
  std::vector<double> t;
  std::vector<std::complex<double>> value;
  std::vector<double> modulus;
  /// t values skipped because they fell in a guard disk.
  std::vector<double> skipped;
};

/// Grid t_lo, t_lo + step, ... up to t_hi (inclusive within rounding).
std::vector<double> grid_points(double lo, double hi, double step);

LineProfile profile_line(double sigma, double t_lo, double t_hi, double t_step,
                         const DiagonalFunction& f, const PrecisionContext& ctx);

/// Interior local minima of a profile whose Newton distance estimate
/// |f| / |f'| (slope from the neighbouring samples) is below `threshold`.
std::vector<Seed> local_minima(const LineProfile& profile, double threshold);

/// Seeds along sigma + it for t over [t_lo, t_hi].
std::vector<Seed> scan_line(double sigma, double t_lo, double t_hi, double t_step,
                            const PrecisionContext& ctx, double threshold = 0.5,
                            const DiagonalFunction& f = DiagonalFunction());

struct ZeroRecord {
  Complex location;
  double residual = 0;
  double derivative_mag = 0;
  Method method = Method::harmonic_product;
  std::optional<EvalParams> params;
  int digits_used = 0;
  std::optional<int> winding;
  bool certified = false;
  /// Certification notes such as an unresolved pair; not persisted.
  std::string diagnostic;

  double sigma() const { return location.real().to_double(); }
  double t() const { return location.imag().to_double(); }
};

inline constexpr int kMaxNewtonIterations = 60;

/// Newton iteration s <- s - f(s)/f'(s) with f' the harmonic-product
/// derivative; secant steps when |f'| < 1e-8. Converged once the step is
/// below 10^(-digits+5). Throws NoConvergence. The record is uncertified.
ZeroRecord refine_zero(const Complex& seed, const DiagonalFunction& f, const PrecisionContext& ctx);

struct SeedFailure {
  Seed seed;
  std::string message;
};

struct FindResult {
  /// Unique zeros inside the region, ascending in t then sigma.
  std::vector<ZeroRecord> zeros;
  std::vector<SeedFailure> failures;
  size_t seeds = 0;
  /// Refinements that converged outside the scanned region.
  size_t outside = 0;
};

/// Scans every sigma line of the region, keeps line minima that are also
/// minimal against the neighbouring lines, refines them and deduplicates.
FindResult find_zeros_region(const ScanConfig& config, const DiagonalFunction& f,
                             const PrecisionContext& ctx);

struct RealAxisPoint {
  enum class Kind { zero, pole, indeterminate };

  Real location;
  Kind kind;
  /// Location known exactly (poles, indeterminate points, zeros at -2k).
  bool exact = false;
};

std::string_view to_string(RealAxisPoint::Kind kind);

/// Real zeros of s -> zeta_2(s, s) on [lo, hi] by sign changes on a grid of
/// spacing `step`, bisected and then polished by Newton to 10^(-digits+5);
/// poles and indeterminate points labelled from SingularityMap.
std::vector<RealAxisPoint> real_axis_scan(double lo, double hi, const PrecisionContext& ctx,
                                          double step = 0.005);

/// Runs fn(i) for i in [0, count) on `threads` workers.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn);

}  // namespace dzeta

#endif  // DZETA_ZERO_SEARCH_HPP
