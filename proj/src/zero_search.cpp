#include "dzeta/zero_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "dzeta/errors.hpp"
#include "dzeta/singularity.hpp"

namespace dzeta {

std::string_view to_string(Method m) {
  return m == Method::harmonic_product ? "harmonic_product" : "euler_maclaurin";
}

Method method_from_string(std::string_view name) {
  if (name == "harmonic_product" || name == "hp") return Method::harmonic_product;
  if (name == "euler_maclaurin" || name == "em") return Method::euler_maclaurin;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

DiagonalFunction::DiagonalFunction(Method method, std::optional<EvalParams> params, double guard_radius)
    : method_(method), params_(params), guard_radius_(guard_radius) {
  if (params_) params_->validate();
}

std::optional<EvalParams> DiagonalFunction::params_at(double t) const {
  if (method_ == Method::harmonic_product) return std::nullopt;
  if (params_) return params_;
  EvalParams p = em_params_for(std::fabs(t));
  p.guard_radius = guard_radius_;
  return p;
}

Complex DiagonalFunction::operator()(const Complex& s, const PrecisionContext& ctx) const {
  if (method_ == Method::harmonic_product) return double_zeta_diagonal(s, ctx, guard_radius_);
  // The diagonal loci of the two-variable function are the diagonal
  // singularities; report them the same way for both methods.
  detail::check_diagonal(s, guard_radius_);
  return double_zeta_em(s, s, *params_at(s.imag().to_double()), ctx);
}

Complex DiagonalFunction::derivative(const Complex& s, const PrecisionContext& ctx) const {
  return diagonal_derivative(s, ctx, guard_radius_);
}

void ScanConfig::validate() const {
  if (!(sigma_lo < sigma_hi)) throw DomainError("scan: sigma range is empty");
  if (!(t_lo < t_hi)) throw DomainError("scan: t range is empty");
  if (!(sigma_step > 0) || !(t_step > 0)) throw DomainError("scan: steps must be positive");
  if (!(candidate_threshold > 0)) throw DomainError("scan: threshold must be positive");
  if (!(dedupe_radius > 0)) throw DomainError("scan: dedupe radius must be positive");
  PrecisionContext check(scan_digits);
  (void)check;
}

std::vector<double> grid_points(double lo, double hi, double step) {
  std::vector<double> out;
  auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  out.reserve(static_cast<size_t>(count) + 1);
  for (long k = 0; k <= count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

LineProfile profile_line(double sigma, double t_lo, double t_hi, double t_step,
                         const DiagonalFunction& f, const PrecisionContext& ctx) {
  LineProfile profile;
  profile.sigma = sigma;
  profile.t = grid_points(t_lo, t_hi, t_step);
  profile.value.reserve(profile.t.size());
  profile.modulus.reserve(profile.t.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double t : profile.t) {
    try {
      std::complex<double> v = f(Complex(sigma, t, ctx.working_bits()), ctx).to_std();
      profile.value.push_back(v);
      profile.modulus.push_back(std::abs(v));
    } catch (const SingularityError&) {
      profile.value.emplace_back(nan, nan);
      profile.modulus.push_back(nan);
      profile.skipped.push_back(t);
    }
  }
  return profile;
}

std::vector<Seed> local_minima(const LineProfile& profile, double threshold) {
  std::vector<Seed> seeds;
  const auto& m = profile.modulus;
  for (size_t k = 1; k + 1 < m.size(); ++k) {
    if (std::isnan(m[k]) || std::isnan(m[k - 1]) || std::isnan(m[k + 1])) continue;
    if (!(m[k] <= m[k - 1] && m[k] < m[k + 1])) continue;
    // Distance to the zero Newton would predict, with |f'| = |df/dt| taken
    // from the neighbouring samples.
    double slope = std::abs(profile.value[k + 1] - profile.value[k - 1]) /
                   (profile.t[k + 1] - profile.t[k - 1]);
    if (slope > 0 && m[k] / slope < threshold) {
      seeds.push_back({profile.sigma, profile.t[k], m[k]});
    }
  }
  return seeds;
}

std::vector<Seed> scan_line(double sigma, double t_lo, double t_hi, double t_step,
                            const PrecisionContext& ctx, double threshold, const DiagonalFunction& f) {
  if (!(t_lo < t_hi) || !(t_step > 0)) throw DomainError("scan_line: empty t range");
  return local_minima(profile_line(sigma, t_lo, t_hi, t_step, f, ctx), threshold);
}

ZeroRecord refine_zero(const Complex& seed, const DiagonalFunction& f, const PrecisionContext& ctx) {
  const Precision bits = ctx.working_bits();
  const double tol_log10 = -ctx.digits() + 5;
  detail::check_diagonal(seed, f.guard_radius());
  Complex s(seed, bits);
  std::optional<Complex> prev_s;
  std::optional<Complex> prev_f;
  bool converged = false;
  try {
    for (int iter = 0; iter < kMaxNewtonIterations && !converged; ++iter) {
      Complex fs = f(s, ctx);
      if (fs.is_zero()) {
        converged = true;
        break;
      }
      Complex d = f.derivative(s, ctx);
      Complex step(bits);
      if (abs(d) < 1e-8) {
        if (prev_s && !(fs == *prev_f)) {
          step = fs * (s - *prev_s) / (fs - *prev_f);
        } else {
          step = Complex(1e-4, 1e-4, bits);
        }
      } else {
        step = fs / d;
      }
      prev_s = s;
      prev_f = fs;
      s -= step;
      if (distance(s, seed) > 10.0) throw NoConvergence("Newton iteration diverged from the seed");
      converged = abs(step).log10_abs() < tol_log10;
    }
  } catch (const SingularityError& e) {
    throw NoConvergence(std::string("Newton iterate reached a singularity: ") + e.what());
  }
  if (!converged) throw NoConvergence("Newton iteration budget exhausted");

  ZeroRecord rec;
  s.round_to(ctx.result_bits());
  rec.location = s;
  rec.residual = abs(f(s, ctx)).to_double();
  rec.derivative_mag = abs(f.derivative(s, ctx)).to_double();
  rec.method = f.method();
  rec.params = f.params_at(rec.t());
  rec.digits_used = ctx.digits();
  return rec;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  unsigned workers = static_cast<unsigned>(std::min<size_t>(threads, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

// A line minimum survives when no neighbouring line is lower nearby.
bool minimal_across_lines(const Seed& seed, size_t k, const std::vector<const LineProfile*>& neighbours) {
  for (const LineProfile* line : neighbours) {
    for (size_t j = (k == 0 ? 0 : k - 1); j <= k + 1 && j < line->modulus.size(); ++j) {
      double m = line->modulus[j];
      if (!std::isnan(m) && m < seed.modulus) return false;
    }
  }
  return true;
}

bool inside(const ScanConfig& c, const ZeroRecord& r) {
  double sigma = r.sigma();
  double t = r.t();
  return sigma >= c.sigma_lo && sigma <= c.sigma_hi && t >= c.t_lo && t <= c.t_hi;
}

}  // namespace

FindResult find_zeros_region(const ScanConfig& config, const DiagonalFunction& f,
                             const PrecisionContext& ctx) {
  config.validate();
  const PrecisionContext scan_ctx(config.scan_digits, PrecisionContext::kMinGuardDigits);
  const std::vector<double> sigmas = grid_points(config.sigma_lo, config.sigma_hi, config.sigma_step);

  std::vector<LineProfile> profiles(sigmas.size());
  parallel_for(sigmas.size(), config.threads, [&](size_t j) {
    profiles[j] = profile_line(sigmas[j], config.t_lo, config.t_hi, config.t_step, f, scan_ctx);
  });

  std::vector<Seed> seeds;
  for (size_t j = 0; j < profiles.size(); ++j) {
    std::vector<const LineProfile*> neighbours;
    if (j > 0) neighbours.push_back(&profiles[j - 1]);
    if (j + 1 < profiles.size()) neighbours.push_back(&profiles[j + 1]);
    const auto& ts = profiles[j].t;
    for (const Seed& seed : local_minima(profiles[j], config.candidate_threshold)) {
      size_t k = static_cast<size_t>(std::lower_bound(ts.begin(), ts.end(), seed.t) - ts.begin());
      if (minimal_across_lines(seed, k, neighbours)) seeds.push_back(seed);
    }
  }

  FindResult result;
  result.seeds = seeds.size();
  std::vector<std::optional<ZeroRecord>> refined(seeds.size());
  std::vector<std::string> errors(seeds.size());
  parallel_for(seeds.size(), config.threads, [&](size_t i) {
    try {
      refined[i] = refine_zero(Complex(seeds[i].sigma, seeds[i].t, ctx.working_bits()), f, ctx);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::vector<ZeroRecord> found;
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (!refined[i]) {
      result.failures.push_back({seeds[i], errors[i]});
    } else if (!inside(config, *refined[i])) {
      ++result.outside;
    } else {
      found.push_back(std::move(*refined[i]));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.t() != b.t() ? a.t() < b.t() : a.sigma() < b.sigma();
  });
  for (ZeroRecord& rec : found) {
    bool duplicate = false;
    for (auto it = result.zeros.rbegin(); it != result.zeros.rend(); ++it) {
      if (rec.t() - it->t() > config.dedupe_radius) break;
      if (distance(rec.location, it->location) <= config.dedupe_radius) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.zeros.push_back(std::move(rec));
  }
  return result;
}

std::string_view to_string(RealAxisPoint::Kind kind) {
  switch (kind) {
    case RealAxisPoint::Kind::zero:
      return "zero";
    case RealAxisPoint::Kind::pole:
      return "pole";
    case RealAxisPoint::Kind::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

struct AxisSample {
  double x;
  // Sign of zeta_2(x, x); 0 for an exact zero.
  int sign;
  bool pole;
};

class RealDiagonal {
 public:
  explicit RealDiagonal(const PrecisionContext& ctx) : ctx_(ctx) {}

  // Value at x; within the guard disk of -k the central value stands in.
  Real value(const Real& x) const {
    Complex s(x, Real(x.precision()));
    if (auto sing = SingularityMap::diagonal_near(s, kDefaultGuardRadius)) {
      if (sing->kind == DiagonalSingularity::Kind::indeterminate) {
        long k = -sing->location.numerator().get_si();
        return central_value(static_cast<unsigned>(k)).to_real(ctx_.working_bits());
      }
      throw PoleError(sing->describe());
    }
    return detail::diagonal_at(s, ctx_.working_digits()).real();
  }

  Real derivative(const Real& x) const {
    Complex s(x, Real(x.precision()));
    return diagonal_derivative(s, ctx_).real();
  }

 private:
  PrecisionContext ctx_;
};

Real bracket_root(const RealDiagonal& f, double lo_d, double hi_d, const PrecisionContext& ctx) {
  const Precision bits = ctx.working_bits();
  Real lo(lo_d, bits);
  Real hi(hi_d, bits);
  int sign_lo = f.value(lo).sign();
  auto bisect_once = [&] {
    Real mid = (lo + hi) / 2L;
    int sm = f.value(mid).sign();
    if (sm == 0) {
      lo = mid;
      hi = mid;
    } else if (sm == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  };
  while ((hi - lo).to_double() > 1e-12 * std::max(1.0, std::fabs(lo_d))) bisect_once();

  const double tol_log10 = -ctx.digits() + 5;
  Real x = (lo + hi) / 2L;
  for (int iter = 0; iter < 200; ++iter) {
    Real fx = f.value(x);
    if (fx.is_zero()) return x;
    Real d = f.derivative(x);
    Real next = x - fx / d;
    bool inside_bracket = next >= lo && next <= hi && !d.is_zero();
    if (!inside_bracket) {
      bisect_once();
      next = (lo + hi) / 2L;
    } else if (fx.sign() == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    double moved = abs(next - x).log10_abs();
    x = std::move(next);
    if (moved < tol_log10) break;
  }
  x.round_to(ctx.result_bits());
  return x;
}

}  // namespace

std::vector<RealAxisPoint> real_axis_scan(double lo, double hi, const PrecisionContext& ctx, double step) {
  if (!(lo < hi)) throw DomainError("real_axis_scan: empty range");
  if (!(step > 0)) throw DomainError("real_axis_scan: step must be positive");
  const double exclusion = 10 * kDefaultGuardRadius;
  RealDiagonal f(ctx);
  std::vector<RealAxisPoint> out;

  std::vector<DiagonalSingularity> specials = SingularityMap::diagonal_in_range(lo, hi);
  std::vector<AxisSample> samples;
  auto near_special = [&](double x) {
    return std::any_of(specials.begin(), specials.end(),
                       [&](const DiagonalSingularity& d) { return std::fabs(x - d.location.to_double()) <= exclusion; });
  };
  std::vector<double> xs = grid_points(lo, hi, step);
  if (hi - xs.back() > exclusion) xs.push_back(hi);
  for (double x : xs) {
    if (near_special(x)) continue;
    samples.push_back({x, f.value(Real(x, ctx.working_bits())).sign(), false});
  }
  for (const DiagonalSingularity& d : specials) {
    RealAxisPoint::Kind kind = d.kind == DiagonalSingularity::Kind::pole ? RealAxisPoint::Kind::pole
                                                                         : RealAxisPoint::Kind::indeterminate;
    out.push_back({d.location.to_real(ctx.result_bits()), kind, true});
    if (d.kind == DiagonalSingularity::Kind::pole) {
      samples.push_back({d.location.to_double(), 0, true});
    } else {
      Rational c = central_value(static_cast<unsigned>(-d.location.numerator().get_si()));
      samples.push_back({d.location.to_double(), c.sign(), false});
      if (c.is_zero()) out.push_back({d.location.to_real(ctx.result_bits()), RealAxisPoint::Kind::zero, true});
    }
  }
  std::sort(samples.begin(), samples.end(), [](const AxisSample& a, const AxisSample& b) { return a.x < b.x; });

  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const AxisSample& a = samples[i];
    const AxisSample& b = samples[i + 1];
    if (a.pole || b.pole || a.sign == 0 || b.sign == 0) continue;
    if (a.sign != b.sign) out.push_back({bracket_root(f, a.x, b.x, ctx), RealAxisPoint::Kind::zero, false});
  }
  std::stable_sort(out.begin(), out.end(), [](const RealAxisPoint& a, const RealAxisPoint& b) {
    if (a.location != b.location) return a.location < b.location;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

}  // namespace dzeta
