#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tse/types.hpp"

namespace tse {

/// Sakoe-Chiba band expressed as a percentage of series length.
/// An empty percent means no constraint at all.
struct BandSpec {
  std::optional<double> percent;  // in [0,100]; nullopt = unconstrained

  static BandSpec unconstrained() { return BandSpec{}; }
  static BandSpec of_percent(double p) { return BandSpec{p}; }

  bool is_unconstrained() const { return !percent.has_value(); }
};

/// A band resolved against one concrete pair of lengths: a cell radius
/// around the scaled diagonal of the rows x cols DP matrix.
struct ResolvedBand {
  std::optional<index_t> radius;  // nullopt = unconstrained
  index_t rows = 0;               // length of the first (row) series
  index_t cols = 0;               // length of the second (column) series
  bool widened = false;           // radius was raised to |rows - cols|

  static ResolvedBand unconstrained(index_t n, index_t m) {
    return ResolvedBand{std::nullopt, n, m, false};
  }

  /// Widens the requested radius so the corner cell stays reachable.
  static ResolvedBand with_radius(index_t r, index_t n, index_t m) {
    if (r < 0) throw std::invalid_argument("ResolvedBand: negative radius");
    const index_t gap = std::abs(n - m);
    return ResolvedBand{std::max(r, gap), n, m, r < gap};
  }

  bool is_unconstrained() const { return !radius.has_value(); }
};

/// Resolves a percentage band for lengths n, m. The radius is
/// round(percent/100 * max(n,m)), half up, then widened to |n-m|.
inline ResolvedBand resolve_band(const BandSpec& spec, index_t n, index_t m) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("resolve_band: lengths must be >= 1");
  }
  if (spec.is_unconstrained()) return ResolvedBand::unconstrained(n, m);
  const double p = *spec.percent;
  if (!(p >= 0.0 && p <= 100.0)) {
    throw std::invalid_argument("resolve_band: percent outside [0,100]");
  }
  const auto raw =
      static_cast<index_t>(std::llround(p / 100.0 * static_cast<double>(std::max(n, m))));
  return ResolvedBand::with_radius(raw, n, m);
}

/// Inclusive column range of in-band cells on row i (both 1-based),
/// centered on the scaled diagonal j* = i*cols/rows. Windows are
/// non-decreasing in i and always cover (1,1) and (rows,cols).
inline std::pair<index_t, index_t> band_window(index_t i, const ResolvedBand& band) {
  if (band.is_unconstrained()) return {1, band.cols};
  const double center =
      static_cast<double>(i) * static_cast<double>(band.cols) / static_cast<double>(band.rows);
  const double r = static_cast<double>(*band.radius);
  const index_t lo = std::max<index_t>(1, static_cast<index_t>(std::ceil(center - r)));
  const index_t hi = std::min<index_t>(band.cols, static_cast<index_t>(std::floor(center + r)));
  return {lo, hi};
}

}  // namespace tse
