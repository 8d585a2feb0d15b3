#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <vector>

#include <CLI11.hpp>

#include "dzeta/catalog.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/verification.hpp"
#include "table.hpp"

namespace dzeta::cli {

namespace {

constexpr int kCrossCheckDigits = 110;

std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

double parse_double(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

long parse_long(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

Complex parse_point(const std::string& text, const PrecisionContext& ctx) {
  try {
    return Complex::parse(text, ctx.working_bits());
  } catch (const DomainError&) {
    throw UsageError("invalid complex number '" + text + "' (expected a+bi)");
  }
}

Method parse_method(const std::string& text) {
  try {
    return method_from_string(text);
  } catch (const DomainError&) {
    throw UsageError("unknown method '" + text + "' (expected hp or em)");
  }
}

Cell param_cell(const std::optional<EvalParams>& p, bool want_l) {
  if (!p) return std::monostate{};
  return static_cast<long long>(want_l ? p->l : p->N);
}

Cell optional_int(const std::optional<int>& v) {
  if (!v) return std::monostate{};
  return static_cast<long long>(*v);
}

Cell text_or_null(const std::string& s) {
  if (s.empty()) return std::monostate{};
  return s;
}

struct Globals {
  int digits = 50;
  int guard_digits = PrecisionContext::kDefaultGuardDigits;
  std::string params;
  std::string format = "csv";
  std::string out;
  unsigned threads = 1;
  bool digits_explicit = false;

  PrecisionContext context() const {
    try {
      return PrecisionContext(digits, guard_digits);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  std::optional<EvalParams> fixed_params() const {
    if (params.empty()) return std::nullopt;
    return parse_params(params);
  }
};

using Command = std::function<int(const Globals&, Table&, std::ostream& err)>;

// ---- eval ----

struct EvalArgs {
  std::string s, s1, s2, method;
};

int cmd_eval(const EvalArgs& a, const Globals& g, Table& table, std::ostream&) {
  const bool diagonal = !a.s.empty();
  if (diagonal == (!a.s1.empty() || !a.s2.empty())) {
    throw UsageError("eval needs either --s or both --s1 and --s2");
  }
  if (!diagonal && (a.s1.empty() || a.s2.empty())) throw UsageError("eval needs both --s1 and --s2");
  const PrecisionContext ctx = g.context();
  const int d = ctx.digits();
  Method method = a.method.empty() ? (diagonal ? Method::harmonic_product : Method::euler_maclaurin)
                                   : parse_method(a.method);
  if (!diagonal && method != Method::euler_maclaurin) {
    throw UsageError("the harmonic product applies on the diagonal only; use --s or --method em");
  }
  Complex s1 = parse_point(diagonal ? a.s : a.s1, ctx);
  Complex s2 = diagonal ? s1 : parse_point(a.s2, ctx);

  std::optional<EvalParams> params;
  Complex value;
  if (method == Method::harmonic_product) {
    value = double_zeta_diagonal(s1, ctx);
  } else {
    params = g.fixed_params();
    if (!params) params = em_params_for(std::fabs(s2.imag().to_double()));
    value = double_zeta_em(s1, s2, *params, ctx);
  }
  table.columns = {"s1", "s2", "value", "re", "im", "abs", "method", "l", "N", "digits"};
  table.add({s1.to_string(d), s2.to_string(d), value.to_string(d), value.real().to_string(d),
             value.imag().to_string(d), abs(value).to_string(d), std::string(to_string(method)),
             param_cell(params, true), param_cell(params, false), static_cast<long long>(d)});
  return kOk;
}

// ---- scan ----

struct ScanArgs {
  double sigma = 0;
  std::string t, method;
};

int cmd_scan(const ScanArgs& a, const Globals& g, Table& table, std::ostream&) {
  Range r = parse_range(a.t);
  const double step = r.step.value_or(0.05);
  const PrecisionContext ctx = g.context();
  Method method = a.method.empty() ? Method::harmonic_product : parse_method(a.method);
  DiagonalFunction f(method, method == Method::euler_maclaurin ? g.fixed_params() : std::nullopt);
  std::vector<double> ts = grid_points(r.lo, r.hi, step);
  std::vector<std::optional<Complex>> values(ts.size());
  parallel_for(ts.size(), g.threads, [&](size_t i) {
    try {
      values[i] = f(Complex(a.sigma, ts[i], ctx.working_bits()), ctx);
    } catch (const SingularityError&) {
    }
  });
  const int d = ctx.digits();
  table.columns = {"t", "abs", "re", "im"};
  for (size_t i = 0; i < ts.size(); ++i) {
    if (!values[i]) {
      table.add({fmt("%.12g", ts[i]), std::monostate{}, std::monostate{}, std::monostate{}});
    } else {
      table.add({fmt("%.12g", ts[i]), abs(*values[i]).to_string(d), values[i]->real().to_string(d),
                 values[i]->imag().to_string(d)});
    }
  }
  return kOk;
}

// ---- find ----

struct FindArgs {
  std::string sigma, t, method, catalog;
  double threshold = 0.5;
  int scan_digits = 16;
  double dedupe = 1e-6;
  double box = kDefaultBoxHalfwidth;
  bool no_certify = false;
};

int cmd_find(const FindArgs& a, const Globals& g, Table& table, std::ostream& err) {
  Range rs = parse_range(a.sigma);
  Range rt = parse_range(a.t);
  ScanConfig cfg;
  cfg.sigma_lo = rs.lo;
  cfg.sigma_hi = rs.hi;
  cfg.sigma_step = rs.step.value_or(cfg.sigma_step);
  cfg.t_lo = rt.lo;
  cfg.t_hi = rt.hi;
  cfg.t_step = rt.step.value_or(cfg.t_step);
  cfg.candidate_threshold = a.threshold;
  cfg.scan_digits = a.scan_digits;
  cfg.dedupe_radius = a.dedupe;
  cfg.threads = g.threads;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!(a.box > 0)) throw UsageError("--box must be positive");
  const PrecisionContext ctx = g.context();
  Method method = a.method.empty() ? Method::harmonic_product : parse_method(a.method);
  DiagonalFunction f(method, method == Method::euler_maclaurin ? g.fixed_params() : std::nullopt);

  FindResult result = find_zeros_region(cfg, f, ctx);
  std::vector<ZeroRecord> zeros =
      a.no_certify ? result.zeros : certify_all(result.zeros, a.box, ctx, f, g.threads);
  for (const SeedFailure& fail : result.failures) {
    err << "warning: seed " << g17(fail.seed.sigma) << "+" << g17(fail.seed.t) << "i: " << fail.message << '\n';
  }
  size_t certified = 0;
  for (const ZeroRecord& z : zeros) {
    if (z.certified) ++certified;
    if (!a.no_certify && !z.certified) {
      err << "warning: zero " << z.location.to_string(17) << " not certified: " << z.diagnostic << '\n';
    }
  }
  err << "seeds " << result.seeds << ", zeros " << zeros.size() << ", certified " << certified << ", failures "
      << result.failures.size() << ", outside region " << result.outside << '\n';
  if (!a.catalog.empty()) {
    CatalogAppender appender(a.catalog, CatalogMetadata::for_search(cfg, ctx.digits()));
    size_t added = appender.append(zeros);
    err << "catalog " << a.catalog << ": " << added << " new, " << appender.catalog().size() << " total\n";
  }

  const int d = ctx.digits();
  table.columns = {"re", "im", "residual", "derivative_mag", "winding", "certified", "method", "l", "N", "digits",
                   "diagnostic"};
  for (const ZeroRecord& z : zeros) {
    table.add({z.location.real().to_string(d), z.location.imag().to_string(d), fmt("%.3e", z.residual),
               g17(z.derivative_mag), optional_int(z.winding), z.certified, std::string(to_string(z.method)),
               param_cell(z.params, true), param_cell(z.params, false), static_cast<long long>(z.digits_used),
               text_or_null(z.diagnostic)});
  }
  return zeros.empty() && !result.failures.empty() ? kNumericFailure : kOk;
}

// ---- real ----

int cmd_real(const std::string& range, const Globals& g, Table& table, std::ostream&) {
  Range r = parse_range(range);
  const PrecisionContext ctx = g.context();
  std::vector<RealAxisPoint> pts = real_axis_scan(r.lo, r.hi, ctx, r.step.value_or(0.005));
  table.columns = {"location", "kind", "exact"};
  for (const RealAxisPoint& p : pts) {
    table.add({p.location.to_string(ctx.digits()), std::string(to_string(p.kind)), p.exact});
  }
  return kOk;
}

// ---- central ----

int cmd_central(const std::string& k, const Globals&, Table& table, std::ostream&) {
  long lo = 0;
  long hi = 0;
  if (k.find(':') != std::string::npos) {
    auto pos = k.find(':');
    lo = parse_long(k.substr(0, pos), "k");
    hi = parse_long(k.substr(pos + 1), "k");
  } else {
    lo = hi = parse_long(k, "k");
  }
  if (lo < 0 || hi < lo) throw UsageError("k must be a non-negative integer or range lo:hi");
  table.columns = {"k", "value"};
  for (long i = lo; i <= hi; ++i) {
    table.add({static_cast<long long>(i), central_value(static_cast<unsigned>(i)).to_string()});
  }
  return kOk;
}

// ---- bound ----

struct BoundArgs {
  std::optional<double> sigma;
  std::string range;
  bool threshold = false;
};

int cmd_bound(const BoundArgs& a, const Globals&, Table& table, std::ostream&) {
  int modes = (a.sigma ? 1 : 0) + (a.range.empty() ? 0 : 1) + (a.threshold ? 1 : 0);
  if (modes != 1) throw UsageError("bound needs exactly one of --sigma, --range, --threshold");
  if (a.threshold) {
    double th = zero_free_threshold();
    table.columns = {"threshold", "bound_at_threshold", "bound_below"};
    table.add({fmt("%.3f", th), g17(zero_free_bound(th)), g17(zero_free_bound(th - 1e-3))});
    return kOk;
  }
  table.columns = {"sigma", "bound"};
  std::vector<double> sigmas;
  if (a.sigma) {
    sigmas.push_back(*a.sigma);
  } else {
    Range r = parse_range(a.range);
    sigmas = grid_points(r.lo, r.hi, r.step.value_or(0.1));
  }
  for (double s : sigmas) {
    if (!(s > 1)) throw UsageError("the bound is defined for sigma > 1");
    table.add({fmt("%.12g", s), g17(zero_free_bound(s))});
  }
  return kOk;
}

// ---- count ----

struct CountArgs {
  std::string catalog, strip;
  std::optional<double> T;
  std::optional<double> series;
  bool fit = false;
  bool nearest = false;
};

int cmd_count(const CountArgs& a, const Globals&, Table& table, std::ostream& err) {
  std::vector<std::string> warnings;
  ZeroCatalog cat = load(a.catalog, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  if (a.nearest) {
    if (!a.strip.empty() || a.T || a.series || a.fit) throw UsageError("--nearest takes no other query flags");
    NearestPair p = nearest_pair(cat);
    table.columns = {"first", "second", "distance"};
    table.add({p.first.location.to_string(17), p.second.location.to_string(17), g17(p.distance)});
    return kOk;
  }
  if (a.strip.empty()) throw UsageError("count needs --strip lo:hi");
  Range s = parse_range(a.strip);
  if (s.step) throw UsageError("--strip takes lo:hi without a step");
  if (a.fit && !a.series) throw UsageError("--fit needs --series STEP");
  if (a.series) {
    CountSeries series = count_series(cat, s.lo, s.hi, *a.series, a.T.value_or(0));
    if (a.fit) {
      LinearFit fit = linear_fit(series);
      table.columns = {"slope", "intercept", "max_abs_residual", "points"};
      table.add({g17(fit.slope), g17(fit.intercept), g17(fit.max_abs_residual),
                 static_cast<long long>(series.size())});
    } else {
      table.columns = {"T", "count"};
      for (auto [T, n] : series) table.add({fmt("%.12g", T), static_cast<long long>(n)});
    }
    return kOk;
  }
  if (!a.T) throw UsageError("count needs --T");
  long n = count_zeros(cat, s.lo, s.hi, *a.T);
  table.columns = {"sigma_lo", "sigma_hi", "T", "count"};
  table.add({fmt("%.12g", s.lo), fmt("%.12g", s.hi), fmt("%.12g", *a.T), static_cast<long long>(n)});
  return kOk;
}

// ---- crosscheck ----

struct CrossArgs {
  std::string zero;
  std::vector<std::string> schedules;
  bool no_refine = false;
};

int cmd_crosscheck(const CrossArgs& a, const Globals& g, Table& table, std::ostream&) {
  Globals gg = g;
  if (!g.digits_explicit) gg.digits = std::max(g.digits, kCrossCheckDigits);
  if (gg.digits < 100) throw UsageError("crosscheck needs --digits 100 or more");
  const PrecisionContext ctx = gg.context();
  std::vector<std::pair<unsigned, unsigned>> schedules;
  for (const std::string& s : a.schedules) {
    EvalParams p = parse_params(s);
    schedules.emplace_back(p.l, p.N);
  }
  if (schedules.empty()) schedules = {{10, 100}, {10, 200}};
  Complex zero = parse_point(a.zero, ctx);
  if (!a.no_refine) zero = refine_zero(zero, DiagonalFunction(), ctx).location;
  AccuracyReport rep = cross_check(zero, schedules, ctx);

  table.columns = {"reference", "l", "N", "deviation", "log10_deviation", "location", "error"};
  bool any = false;
  for (const AccuracyTrial& t : rep.trials) {
    bool ok = !std::isnan(t.deviation);
    any = any || ok;
    Cell lg = std::monostate{};
    if (ok) lg = t.deviation > 0 ? fmt("%.2f", std::log10(t.deviation)) : std::string("-inf");
    table.add({rep.reference.to_string(30), static_cast<long long>(t.l), static_cast<long long>(t.N),
               ok ? Cell(fmt("%.3e", t.deviation)) : Cell(std::monostate{}), lg,
               t.location ? Cell(t.location->to_string(30)) : Cell(std::monostate{}), text_or_null(t.error)});
  }
  return any ? kOk : kNumericFailure;
}

int emit(const Table& table, const Globals& g, std::ostream& out) {
  std::string text = g.format == "json" ? to_json(table) : to_csv(table);
  if (g.out.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(g.out, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) throw Error("cannot write " + g.out);
  return kOk;
}

}  // namespace

Range parse_range(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("invalid range '" + text + "' (expected lo:hi[:step])");
  Range r{parse_double(parts[0], "range bound"), parse_double(parts[1], "range bound"), std::nullopt};
  if (!(r.lo < r.hi)) throw UsageError("empty range '" + text + "'");
  if (parts.size() == 3) {
    r.step = parse_double(parts[2], "range step");
    if (!(*r.step > 0)) throw UsageError("range step must be positive in '" + text + "'");
  }
  return r;
}

EvalParams parse_params(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("invalid params '" + text + "' (expected l,N)");
  long l = parse_long(text.substr(0, comma), "l");
  long n = parse_long(text.substr(comma + 1), "N");
  if (l < 1 || n < 1) throw UsageError("l and N must be positive");
  EvalParams p{static_cast<unsigned>(l), static_cast<unsigned>(n)};
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler double zeta function: evaluation, zero search and certification", "dzeta"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("DZETA_DIGITS"); env && *env) {
    try {
      g.digits = static_cast<int>(parse_long(env, "DZETA_DIGITS"));
      g.digits_explicit = true;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  auto* digits_opt = app.add_option("--digits", g.digits, "significant digits of results (env DZETA_DIGITS)");
  app.add_option("--guard-digits", g.guard_digits, "extra working digits");
  app.add_option("--params", g.params, "Euler-Maclaurin parameters l,N (overrides the height schedule)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "write output to PATH instead of stdout");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

  Command command;

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "evaluate zeta_2(s, s) or zeta_2(s1, s2)");
  c_eval->add_option("--s", eval.s, "diagonal point a+bi");
  c_eval->add_option("--s1", eval.s1, "first argument a+bi");
  c_eval->add_option("--s2", eval.s2, "second argument a+bi");
  c_eval->add_option("--method", eval.method, "hp (harmonic product) or em (Euler-Maclaurin)");
  c_eval->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_eval(eval, gl, t, e); }; });

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "sample zeta_2(s, s) along sigma + it");
  c_scan->add_option("--sigma", scan.sigma, "abscissa")->required();
  c_scan->add_option("--t", scan.t, "t range lo:hi[:step] (step 0.05)")->required();
  c_scan->add_option("--method", scan.method, "hp or em");
  c_scan->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_scan(scan, gl, t, e); }; });

  FindArgs find;
  auto* c_find = app.add_subcommand("find", "search, refine and certify zeros in a region");
  c_find->add_option("--sigma", find.sigma, "sigma range lo:hi[:step] (step 0.01)")->required();
  c_find->add_option("--t", find.t, "t range lo:hi[:step] (step 0.05)")->required();
  c_find->add_option("--threshold", find.threshold, "candidate bound on |f|/|f'|");
  c_find->add_option("--scan-digits", find.scan_digits, "precision of the grid scan");
  c_find->add_option("--dedupe", find.dedupe, "deduplication radius");
  c_find->add_option("--box", find.box, "certification box half-width");
  c_find->add_flag("--no-certify", find.no_certify, "skip winding-number certification");
  c_find->add_option("--catalog", find.catalog, "append results to this catalog file");
  c_find->add_option("--method", find.method, "hp or em");
  c_find->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_find(find, gl, t, e); }; });

  std::string real_range;
  auto* c_real = app.add_subcommand("real", "real zeros, poles and indeterminate points on an interval");
  c_real->add_option("--range", real_range, "interval lo:hi[:step] (step 0.005)")->required();
  c_real->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_real(real_range, gl, t, e); }; });

  std::string central_k;
  auto* c_central = app.add_subcommand("central", "exact central values at s = -k");
  c_central->add_option("--k", central_k, "k or lo:hi")->required();
  c_central->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_central(central_k, gl, t, e); }; });

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "zero-free bound on vertical lines sigma > 1");
  c_bound->add_option("--sigma", bound.sigma, "single abscissa");
  c_bound->add_option("--range", bound.range, "abscissae lo:hi[:step] (step 0.1)");
  c_bound->add_flag("--threshold", bound.threshold, "least sigma on the 1e-3 grid with bound < 1");
  c_bound->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_bound(bound, gl, t, e); }; });

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "count catalogued zeros in a strip");
  c_count->add_option("--catalog", count.catalog, "catalog file")->required()->check(CLI::ExistingFile);
  c_count->add_option("--strip", count.strip, "open strip lo:hi in sigma");
  c_count->add_option("--T", count.T, "height");
  c_count->add_option("--series", count.series, "cumulative counts every STEP in T");
  c_count->add_flag("--fit", count.fit, "least-squares line through the series");
  c_count->add_flag("--nearest", count.nearest, "closest pair of zeros");
  c_count->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_count(count, gl, t, e); }; });

  CrossArgs cross;
  auto* c_cross = app.add_subcommand("crosscheck", "compare a zero with its Euler-Maclaurin counterparts");
  c_cross->add_option("--zero", cross.zero, "zero a+bi")->required();
  c_cross->add_option("--schedule", cross.schedules, "l,N (repeatable; default 10,100 and 10,200)");
  c_cross->add_flag("--no-refine", cross.no_refine, "use --zero as given instead of refining it first");
  c_cross->callback([&] { command = [&](const Globals& gl, Table& t, std::ostream& e) { return cmd_crosscheck(cross, gl, t, e); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (digits_opt->count() > 0) g.digits_explicit = true;

  try {
    if (!command) throw UsageError("no subcommand given");
    if (!g.params.empty()) parse_params(g.params);
    Table table;
    int code = command(g, table, err);
    emit(table, g, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CoverageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace dzeta::cli
