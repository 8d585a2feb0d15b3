#include "dzeta/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "dzeta/errors.hpp"
#include "dzeta/singularity.hpp"

namespace dzeta {

void Rectangle::validate() const {
  if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi)) throw DomainError("rectangle is empty");
}

Rectangle Rectangle::around(double sigma, double t, double halfwidth) {
  return {sigma - halfwidth, sigma + halfwidth, t - halfwidth, t + halfwidth};
}

namespace {

double distance_to_boundary(const Rectangle& r, double x, double y) {
  bool inside = x >= r.sigma_lo && x <= r.sigma_hi && y >= r.t_lo && y <= r.t_hi;
  if (inside) {
    return std::min({x - r.sigma_lo, r.sigma_hi - x, y - r.t_lo, r.t_hi - y});
  }
  double dx = std::max({r.sigma_lo - x, 0.0, x - r.sigma_hi});
  double dy = std::max({r.t_lo - y, 0.0, y - r.t_hi});
  return std::hypot(dx, dy);
}

constexpr int kInitialPerEdge = 16;
constexpr double kMaxInitialSpacing = 0.05;

class BoundaryWalker {
 public:
  BoundaryWalker(const DiagonalFunction& f, const PrecisionContext& ctx) : f_(f), ctx_(ctx) {}

  // Unit phase of zeta_2 at (sigma, t).
  std::complex<double> phase_at(double sigma, double t) {
    if (++samples_ > kMaxWindingSamples) {
      throw NonConvergent("winding: more than 2^20 boundary samples needed");
    }
    Complex v;
    try {
      v = f_(Complex(sigma, t, ctx_.working_bits()), ctx_);
    } catch (const SingularityError& e) {
      throw BoundaryNearZero(std::string("winding contour meets a singularity: ") + e.what());
    }
    double mag = log10_abs(v);
    if (mag < -ctx_.digits() + 10) {
      throw BoundaryNearZero("winding contour passes too close to a zero; perturb the rectangle");
    }
    // Rescale before leaving arbitrary precision so tiny values keep a phase.
    Real scale(1L, v.precision());
    mpfr_mul_2si(scale.raw(), scale.raw(), -static_cast<long>(std::floor(mag * 3.321928094887362)),
                 MPFR_RNDN);
    v *= scale;
    std::complex<double> w = v.to_std();
    return w / std::abs(w);
  }

  // Total argument change along the straight segment a -> b.
  double edge(double sa, double ta, double sb, double tb, int initial) {
    double total = 0;
    std::complex<double> prev = phase_at(sa, ta);
    for (int k = 1; k <= initial; ++k) {
      double u0 = static_cast<double>(k - 1) / initial;
      double u1 = static_cast<double>(k) / initial;
      std::complex<double> next = phase_at(sa + u1 * (sb - sa), ta + u1 * (tb - ta));
      total += segment(sa, ta, sb, tb, u0, prev, u1, next);
      prev = next;
    }
    return total;
  }

 private:
  static double pole_distance(double sigma, double t) {
    return std::min(std::hypot(sigma - 1.0, t), std::hypot(sigma - 0.5, t));
  }

  static double log10_abs(const Complex& z) {
    double re = z.real().log10_abs();
    double im = z.imag().log10_abs();
    double hi = std::max(re, im);
    if (!std::isfinite(hi)) return hi;
    return hi + 0.5 * std::log10(1.0 + std::pow(10.0, 2 * (std::min(re, im) - hi)));
  }

  double segment(double sa, double ta, double sb, double tb, double u0, std::complex<double> v0, double u1,
                 std::complex<double> v1) {
    double jump = std::arg(v1 * std::conj(v0));
    double um = 0.5 * (u0 + u1);
    double len = (u1 - u0) * std::hypot(sb - sa, tb - ta);
    // A pole winds fully within a few multiples of its distance; keep the
    // samples finer than that so the turn cannot alias.
    bool near_pole = len > 0.5 * pole_distance(sa + um * (sb - sa), ta + um * (tb - ta));
    if (std::fabs(jump) < kMaxPhaseJump && !near_pole) return jump;
    std::complex<double> vm = phase_at(sa + um * (sb - sa), ta + um * (tb - ta));
    return segment(sa, ta, sb, tb, u0, v0, um, vm) + segment(sa, ta, sb, tb, um, vm, u1, v1);
  }

  const DiagonalFunction& f_;
  const PrecisionContext& ctx_;
  size_t samples_ = 0;
};

}  // namespace

int winding_number(const Rectangle& rect, const PrecisionContext& ctx, const DiagonalFunction& f) {
  rect.validate();
  if (rect.t_lo <= f.guard_radius() && rect.t_hi >= -f.guard_radius()) {
    for (const DiagonalSingularity& d : SingularityMap::diagonal_in_range(
             rect.sigma_lo - f.guard_radius(), rect.sigma_hi + f.guard_radius())) {
      if (distance_to_boundary(rect, d.location.to_double(), 0.0) <= f.guard_radius()) {
        throw BoundaryNearZero("winding contour passes within the guard radius of the " + d.describe());
      }
    }
  }
  // Long edges start finer so a full turn cannot hide between two samples.
  auto initial = [](double length) {
    return std::max(kInitialPerEdge, static_cast<int>(std::ceil(length / kMaxInitialSpacing)));
  };
  double width = rect.sigma_hi - rect.sigma_lo;
  double height = rect.t_hi - rect.t_lo;
  BoundaryWalker walker(f, ctx);
  double total = 0;
  total += walker.edge(rect.sigma_lo, rect.t_lo, rect.sigma_hi, rect.t_lo, initial(width));
  total += walker.edge(rect.sigma_hi, rect.t_lo, rect.sigma_hi, rect.t_hi, initial(height));
  total += walker.edge(rect.sigma_hi, rect.t_hi, rect.sigma_lo, rect.t_hi, initial(width));
  total += walker.edge(rect.sigma_lo, rect.t_hi, rect.sigma_lo, rect.t_lo, initial(height));
  double turns = total / (2 * std::numbers::pi);
  double rounded = std::round(turns);
  if (std::fabs(turns - rounded) > 0.25) {
    throw NonConvergent("winding: argument change is not an integer multiple of 2 pi");
  }
  return static_cast<int>(rounded);
}

ZeroRecord certify_zero(const ZeroRecord& record, double box_halfwidth, const PrecisionContext& ctx,
                        const DiagonalFunction& f) {
  if (!(box_halfwidth > 0)) throw DomainError("certify_zero: box half-width must be positive");
  ZeroRecord out = record;
  int winding = winding_number(Rectangle::around(record.sigma(), record.t(), box_halfwidth), ctx, f);
  out.winding = winding;
  out.derivative_mag = abs(f.derivative(record.location, ctx)).to_double();
  out.certified = winding == 1 && out.derivative_mag > kSimpleZeroThreshold;
  if (winding >= 2) {
    out.diagnostic = "winding " + std::to_string(winding) +
                     ": multiple zero or unresolved pair; split the box";
  } else if (winding == 1 && !out.certified) {
    out.diagnostic = "derivative below the simple-zero threshold";
  } else if (winding < 1) {
    out.diagnostic = "no zero inside the certification box (winding " + std::to_string(winding) + ")";
  }
  return out;
}

std::vector<ZeroRecord> certify_all(const std::vector<ZeroRecord>& records, double box_halfwidth,
                                    const PrecisionContext& ctx, const DiagonalFunction& f, unsigned threads) {
  std::vector<ZeroRecord> out(records);
  parallel_for(records.size(), threads, [&](size_t i) {
    std::string last;
    for (double scale : {1.0, 0.7, 1.3}) {
      try {
        out[i] = certify_zero(records[i], box_halfwidth * scale, ctx, f);
        return;
      } catch (const BoundaryNearZero& e) {
        last = e.what();
      } catch (const Error& e) {
        last = e.what();
        break;
      }
    }
    out[i].certified = false;
    out[i].diagnostic = last;
  });
  return out;
}

AccuracyReport cross_check(const Complex& zero, const std::vector<std::pair<unsigned, unsigned>>& schedules,
                           const PrecisionContext& ctx) {
  if (ctx.digits() < 100) throw DomainError("cross_check needs at least 100 digits");
  AccuracyReport report{zero, {}};
  for (auto [l, n] : schedules) {
    AccuracyTrial trial{l, n, std::nan(""), std::nullopt, {}};
    try {
      DiagonalFunction em(Method::euler_maclaurin, EvalParams{l, n});
      ZeroRecord rec = refine_zero(zero, em, ctx);
      trial.deviation = distance(zero, rec.location);
      trial.location = rec.location;
    } catch (const Error& e) {
      trial.error = e.what();
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace dzeta
