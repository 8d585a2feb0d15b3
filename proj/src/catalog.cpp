#include "dzeta/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "dzeta/errors.hpp"

namespace dzeta {

using json = nlohmann::ordered_json;

namespace {

constexpr double kRegionTolerance = 1e-12;
constexpr const char* kFormatName = "dzeta-catalog";
constexpr int kFormatVersion = 1;

bool before(const ZeroRecord& a, const ZeroRecord& b) {
  double ta = a.t();
  double tb = b.t();
  return ta != tb ? ta < tb : a.sigma() < b.sigma();
}

bool same_grid(const CatalogMetadata& a, const CatalogMetadata& b) {
  return a.sigma_step == b.sigma_step && a.t_step == b.t_step && a.digits == b.digits &&
         a.dedupe_radius == b.dedupe_radius;
}

void check_strip(double sigma_lo, double sigma_hi, double T) {
  if (!(sigma_lo < sigma_hi)) throw DomainError("empty sigma strip");
  if (!(T > 0)) throw DomainError("height T must be positive");
}

}  // namespace

CatalogMetadata CatalogMetadata::for_search(const ScanConfig& config, int digits) {
  CatalogMetadata m;
  m.regions.push_back({config.sigma_lo, config.sigma_hi, config.t_lo, config.t_hi});
  m.sigma_step = config.sigma_step;
  m.t_step = config.t_step;
  m.digits = digits;
  m.dedupe_radius = config.dedupe_radius;
  return m;
}

void ZeroCatalog::add(ZeroRecord record) {
  if (!(record.t() > 0)) throw DomainError("catalog holds upper half-plane zeros only (t > 0)");
  const double radius = metadata_.dedupe_radius;
  const double t = record.t();
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), t - radius,
                             [](const ZeroRecord& e, double v) { return e.t() < v; });
  for (auto it = lo; it != entries_.end() && it->t() <= t + radius; ++it) {
    if (distance(it->location, record.location) <= radius) {
      throw DuplicateError("zero " + record.location.to_string(17) + " duplicates catalog entry " +
                           it->location.to_string(17));
    }
  }
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), record, before);
  entries_.insert(pos, std::move(record));
}

void ZeroCatalog::add_region(const SearchRegion& region) {
  if (!(region.sigma_lo < region.sigma_hi) || !(region.t_lo < region.t_hi)) {
    throw DomainError("empty search region");
  }
  SearchRegion r = region;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = metadata_.regions.begin(); it != metadata_.regions.end(); ++it) {
      if (it->sigma_lo == r.sigma_lo && it->sigma_hi == r.sigma_hi && r.t_lo <= it->t_hi &&
          r.t_hi >= it->t_lo) {
        r.t_lo = std::min(r.t_lo, it->t_lo);
        r.t_hi = std::max(r.t_hi, it->t_hi);
        metadata_.regions.erase(it);
        changed = true;
        break;
      }
    }
  }
  metadata_.regions.push_back(r);
  std::sort(metadata_.regions.begin(), metadata_.regions.end(), [](const SearchRegion& a, const SearchRegion& b) {
    return std::tie(a.sigma_lo, a.sigma_hi, a.t_lo, a.t_hi) < std::tie(b.sigma_lo, b.sigma_hi, b.t_lo, b.t_hi);
  });
}

size_t ZeroCatalog::merge(const ZeroCatalog& other) {
  if (!same_grid(metadata_, other.metadata_)) {
    throw SchemaError("cannot merge catalogs with different grid or precision settings");
  }
  for (const SearchRegion& r : other.metadata_.regions) add_region(r);
  size_t added = 0;
  for (const ZeroRecord& rec : other.entries_) {
    try {
      add(rec);
      ++added;
    } catch (const DuplicateError&) {
    }
  }
  return added;
}

double ZeroCatalog::coverage_height(double sigma_lo, double sigma_hi) const {
  std::vector<std::pair<double, double>> bands;
  for (const SearchRegion& r : metadata_.regions) {
    if (r.sigma_lo <= sigma_lo + kRegionTolerance && sigma_hi <= r.sigma_hi + kRegionTolerance) {
      bands.emplace_back(r.t_lo, r.t_hi);
    }
  }
  if (bands.empty()) return 0;
  std::sort(bands.begin(), bands.end());
  double reach = bands.front().second;
  for (auto [lo, hi] : bands) {
    if (lo > reach + kRegionTolerance) break;
    reach = std::max(reach, hi);
  }
  return reach;
}

bool ZeroCatalog::covers(double sigma_lo, double sigma_hi, double T) const {
  return T <= coverage_height(sigma_lo, sigma_hi) + kRegionTolerance;
}

long count_zeros(const ZeroCatalog& cat, double sigma_lo, double sigma_hi, double T) {
  check_strip(sigma_lo, sigma_hi, T);
  if (!cat.covers(sigma_lo, sigma_hi, T)) {
    std::ostringstream msg;
    msg << "catalog does not cover " << sigma_lo << " < sigma < " << sigma_hi << ", 0 < t < " << T;
    throw CoverageError(msg.str());
  }
  long n = 0;
  for (const ZeroRecord& e : cat.entries()) {
    double t = e.t();
    if (t >= T) break;
    double sigma = e.sigma();
    if (sigma > sigma_lo && sigma < sigma_hi && t > 0) ++n;
  }
  return n;
}

NearestPair nearest_pair(const ZeroCatalog& cat) {
  const auto& e = cat.entries();
  if (e.size() < 2) throw TooFewEntries("nearest_pair needs at least two entries");
  size_t bi = 0;
  size_t bj = 1;
  double best = distance(e[0].location, e[1].location);
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size() && e[j].t() - e[i].t() < best; ++j) {
      double d = distance(e[i].location, e[j].location);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  return {e[bi], e[bj], best};
}

CountSeries count_series(const ZeroCatalog& cat, double sigma_lo, double sigma_hi, double T_step,
                         double T_max) {
  if (!(T_step > 0)) throw DomainError("count_series: T step must be positive");
  if (T_max <= 0) {
    T_max = cat.coverage_height(sigma_lo, sigma_hi);
    if (T_max <= 0) throw CoverageError("catalog does not cover the requested sigma strip");
  }
  check_strip(sigma_lo, sigma_hi, T_max);
  if (!cat.covers(sigma_lo, sigma_hi, T_max)) throw CoverageError("catalog does not reach the requested height");

  const long points = static_cast<long>(std::floor(T_max / T_step + 1e-9));
  CountSeries series;
  series.reserve(static_cast<size_t>(std::max(points, 0L)));
  const auto& e = cat.entries();
  size_t next = 0;
  long count = 0;
  for (long k = 1; k <= points; ++k) {
    double T = static_cast<double>(k) * T_step;
    while (next < e.size() && e[next].t() < T) {
      double sigma = e[next].sigma();
      if (sigma > sigma_lo && sigma < sigma_hi) ++count;
      ++next;
    }
    series.emplace_back(T, count);
  }
  return series;
}

LinearFit linear_fit(const CountSeries& series) {
  if (series.size() < 10) throw TooFewEntries("linear_fit needs at least 10 points");
  const double n = static_cast<double>(series.size());
  double sx = 0, sy = 0;
  for (auto [x, y] : series) {
    sx += x;
    sy += static_cast<double>(y);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : series) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (static_cast<double>(y) - my);
  }
  if (sxx == 0) throw DomainError("linear_fit: all abscissae coincide");
  LinearFit fit{sxy / sxx, 0, 0};
  fit.intercept = my - fit.slope * mx;
  for (auto [x, y] : series) {
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::fabs(static_cast<double>(y) - (fit.slope * x + fit.intercept)));
  }
  return fit;
}

namespace {

json header_json(const CatalogMetadata& m) {
  json regions = json::array();
  for (const SearchRegion& r : m.regions) {
    regions.push_back({{"sigma_lo", r.sigma_lo}, {"sigma_hi", r.sigma_hi}, {"t_lo", r.t_lo}, {"t_hi", r.t_hi}});
  }
  return {{"format", kFormatName},
          {"format_version", kFormatVersion},
          {"version", m.version},
          {"regions", regions},
          {"grid", {{"sigma_step", m.sigma_step}, {"t_step", m.t_step}}},
          {"digits", m.digits},
          {"dedupe_radius", m.dedupe_radius}};
}

json entry_json(const ZeroRecord& r, int default_digits) {
  int digits = r.digits_used > 0 ? r.digits_used : default_digits;
  json j;
  j["re"] = r.location.real().to_string(digits);
  j["im"] = r.location.imag().to_string(digits);
  j["digits"] = digits;
  j["residual"] = r.residual;
  j["derivative_mag"] = r.derivative_mag;
  j["method"] = std::string(to_string(r.method));
  j["l"] = r.params ? json(r.params->l) : json(nullptr);
  j["N"] = r.params ? json(r.params->N) : json(nullptr);
  j["winding"] = r.winding ? json(*r.winding) : json(nullptr);
  j["certified"] = r.certified;
  return j;
}

template <typename T>
T require(const json& j, const char* key, size_t line) {
  if (!j.contains(key)) {
    throw SchemaError("catalog line " + std::to_string(line) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError("catalog line " + std::to_string(line) + ": field '" + key + "' has the wrong type");
  }
}

CatalogMetadata parse_header(const json& j) {
  if (!j.is_object() || require<std::string>(j, "format", 1) != kFormatName) {
    throw SchemaError("catalog line 1: not a catalog header");
  }
  if (require<int>(j, "format_version", 1) != kFormatVersion) {
    throw SchemaError("catalog line 1: unsupported format version");
  }
  CatalogMetadata m;
  m.version = require<std::string>(j, "version", 1);
  m.digits = require<int>(j, "digits", 1);
  m.dedupe_radius = require<double>(j, "dedupe_radius", 1);
  json grid = require<json>(j, "grid", 1);
  m.sigma_step = require<double>(grid, "sigma_step", 1);
  m.t_step = require<double>(grid, "t_step", 1);
  json regions = require<json>(j, "regions", 1);
  if (!regions.is_array()) throw SchemaError("catalog line 1: 'regions' must be an array");
  for (const json& r : regions) {
    m.regions.push_back({require<double>(r, "sigma_lo", 1), require<double>(r, "sigma_hi", 1),
                         require<double>(r, "t_lo", 1), require<double>(r, "t_hi", 1)});
  }
  if (m.digits < 16) throw SchemaError("catalog line 1: digits below 16");
  return m;
}

ZeroRecord parse_entry(const json& j, size_t line) {
  if (!j.is_object()) throw SchemaError("catalog line " + std::to_string(line) + ": not an object");
  ZeroRecord r;
  r.digits_used = require<int>(j, "digits", line);
  if (r.digits_used < 1) throw SchemaError("catalog line " + std::to_string(line) + ": bad digit count");
  const Precision bits = bits_for_digits(r.digits_used);
  try {
    r.location = Complex(Real::parse(require<std::string>(j, "re", line), bits),
                         Real::parse(require<std::string>(j, "im", line), bits));
    r.method = method_from_string(require<std::string>(j, "method", line));
  } catch (const DomainError& e) {
    throw SchemaError("catalog line " + std::to_string(line) + ": " + e.what());
  }
  r.residual = require<double>(j, "residual", line);
  r.derivative_mag = require<double>(j, "derivative_mag", line);
  json l = require<json>(j, "l", line);
  json n = require<json>(j, "N", line);
  if (l.is_null() != n.is_null()) {
    throw SchemaError("catalog line " + std::to_string(line) + ": 'l' and 'N' must both be set or both null");
  }
  if (!l.is_null()) r.params = EvalParams{require<unsigned>(j, "l", line), require<unsigned>(j, "N", line)};
  json w = require<json>(j, "winding", line);
  if (!w.is_null()) r.winding = require<int>(j, "winding", line);
  r.certified = require<bool>(j, "certified", line);
  if (!(r.t() > 0)) throw SchemaError("catalog line " + std::to_string(line) + ": entry not in the upper half-plane");
  return r;
}

}  // namespace

std::string serialize(const ZeroCatalog& cat) {
  std::string out = header_json(cat.metadata()).dump();
  out += '\n';
  for (const ZeroRecord& r : cat.entries()) {
    out += entry_json(r, cat.metadata().digits).dump();
    out += '\n';
  }
  return out;
}

ZeroCatalog deserialize(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  std::string line;
  size_t number = 0;
  std::optional<ZeroCatalog> cat;
  std::vector<ZeroRecord> records;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError("catalog line " + std::to_string(number) + ": invalid JSON");
    }
    if (!cat) {
      cat.emplace(parse_header(j));
    } else {
      records.push_back(parse_entry(j, number));
    }
  }
  if (!cat) throw SchemaError("catalog is empty: missing header line");
  if (!std::is_sorted(records.begin(), records.end(), before)) {
    std::string msg = "catalog entries out of order; re-sorted";
    if (warnings) {
      warnings->push_back(msg);
    } else {
      std::cerr << "warning: " << msg << '\n';
    }
  }
  for (ZeroRecord& r : records) cat->add(std::move(r));
  return std::move(*cat);
}

void save(const ZeroCatalog& cat, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << serialize(cat);
    if (!out.flush()) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot replace " + path.string() + ": " + ec.message());
}

ZeroCatalog load(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str(), warnings);
}

CatalogAppender::CatalogAppender(std::filesystem::path path, CatalogMetadata metadata) : path_(std::move(path)) {
  ZeroCatalog fresh(metadata);
  if (std::filesystem::exists(path_)) {
    catalog_ = load(path_);
    ZeroCatalog incoming(std::move(metadata));
    catalog_.merge(incoming);
  } else {
    catalog_ = std::move(fresh);
  }
}

size_t CatalogAppender::append(const std::vector<ZeroRecord>& records) {
  std::lock_guard lock(mutex_);
  size_t added = 0;
  for (const ZeroRecord& r : records) {
    try {
      catalog_.add(r);
      ++added;
    } catch (const DuplicateError&) {
    }
  }
  save(catalog_, path_);
  return added;
}

}  // namespace dzeta
