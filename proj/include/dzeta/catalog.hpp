#ifndef DZETA_CATALOG_HPP
#define DZETA_CATALOG_HPP

#include <filesystem>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dzeta/zero_search.hpp"

namespace dzeta {

inline constexpr const char* kVersion = "0.1.0";

struct SearchRegion {
  double sigma_lo = 0;
  double sigma_hi = 0;
  double t_lo = 0;
  double t_hi = 0;

  bool operator==(const SearchRegion&) const = default;
};

struct CatalogMetadata {
  /// Regions that were searched exhaustively. Vertically adjacent regions
  /// over the same sigma range are coalesced.
  std::vector<SearchRegion> regions;
  double sigma_step = 0.01;
  double t_step = 0.05;
  int digits = 50;
  double dedupe_radius = 1e-6;
  std::string version = kVersion;

  static CatalogMetadata for_search(const ScanConfig& config, int digits);
  bool operator==(const CatalogMetadata&) const = default;
};

/// Zeros of zeta_2(s, s) in the upper half-plane, sorted by t then sigma.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;
  explicit ZeroCatalog(CatalogMetadata metadata) : metadata_(std::move(metadata)) {}

  const CatalogMetadata& metadata() const { return metadata_; }
  const std::vector<ZeroRecord>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Inserts in order. Throws DuplicateError within the dedupe radius of an
  /// existing entry and DomainError for t <= 0.
  void add(ZeroRecord record);
  /// Adds a searched region, coalescing with an adjacent one when possible.
  void add_region(const SearchRegion& region);
  /// Adds the regions of `other` and its entries not already present.
  /// Returns the number of new entries. Throws SchemaError when the grid or
  /// precision differ.
  size_t merge(const ZeroCatalog& other);

  /// Top of the unbroken run of searched t-bands, starting from the lowest
  /// one, over regions spanning sigma_lo..sigma_hi; 0 when none does. The
  /// band below the lowest searched t is taken to be zero-free.
  double coverage_height(double sigma_lo, double sigma_hi) const;
  bool covers(double sigma_lo, double sigma_hi, double T) const;

 private:
  CatalogMetadata metadata_;
  std::vector<ZeroRecord> entries_;
};

/// Number of entries with sigma_lo < sigma < sigma_hi and 0 < t < T.
/// Throws CoverageError outside the cataloged region.
long count_zeros(const ZeroCatalog& cat, double sigma_lo, double sigma_hi, double T);

struct NearestPair {
  ZeroRecord first;
  ZeroRecord second;
  double distance;
};

/// Throws TooFewEntries with fewer than two entries.
NearestPair nearest_pair(const ZeroCatalog& cat);

using CountSeries = std::vector<std::pair<double, long>>;

/// Cumulative counts at T = T_step, 2 T_step, ... up to T_max (default: the
/// top of the covering region).
CountSeries count_series(const ZeroCatalog& cat, double sigma_lo, double sigma_hi, double T_step,
                         double T_max = 0);

struct LinearFit {
  double slope;
  double intercept;
  double max_abs_residual;
};

/// Least-squares line through (T, count). Throws TooFewEntries below 10 points.
LinearFit linear_fit(const CountSeries& series);

/// Newline-delimited JSON: a metadata header line, then one entry per line.
std::string serialize(const ZeroCatalog& cat);
/// Out-of-order entries are re-sorted and a warning is appended to
/// `warnings` (or written to stderr when null).
ZeroCatalog deserialize(const std::string& text, std::vector<std::string>* warnings = nullptr);

void save(const ZeroCatalog& cat, const std::filesystem::path& path);
ZeroCatalog load(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Serializes concurrent writers onto one catalog file; records already
/// present are skipped.
class CatalogAppender {
 public:
  CatalogAppender(std::filesystem::path path, CatalogMetadata metadata);

  /// Adds the records and rewrites the file. Returns how many were new.
  size_t append(const std::vector<ZeroRecord>& records);
  const ZeroCatalog& catalog() const { return catalog_; }

 private:
  std::filesystem::path path_;
  ZeroCatalog catalog_;
  std::mutex mutex_;
};

}  // namespace dzeta

#endif  // DZETA_CATALOG_HPP
