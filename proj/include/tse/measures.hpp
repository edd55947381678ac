#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tse/constraints.hpp"
#include "tse/types.hpp"

namespace tse {

/// Pointwise cost used inside DTW. With squared + final_root, DTW at
/// radius 0 on equal-length series coincides with the Euclidean metric.
enum class CostKind { squared, absolute };

struct GroundCost {
  CostKind kind = CostKind::squared;
  bool final_root = true;  // take sqrt of the accumulated total
};

/// Epsilon matching for LCS. relative keeps the strict two-sided bound
/// a(1-eps) < b < a(1+eps) (bounds ordered, so negative anchors work);
/// absolute uses |a - b| <= eps, so eps = 0 means exact equality.
enum class MatchMode { relative, absolute };

struct MatchSpec {
  double epsilon = 0.25;
  MatchMode mode = MatchMode::absolute;

  void validate() const {
    if (mode == MatchMode::relative) {
      if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("MatchSpec: relative mode requires 0 < epsilon < 1");
      }
    } else if (!(epsilon >= 0.0)) {
      throw std::invalid_argument("MatchSpec: absolute mode requires epsilon >= 0");
    }
  }
};

template <typename Scalar>
inline bool point_match(Scalar a, Scalar b, const MatchSpec& spec) {
  if (spec.mode == MatchMode::absolute) {
    return std::abs(a - b) <= static_cast<Scalar>(spec.epsilon);
  }
  const Scalar b1 = a * static_cast<Scalar>(1.0 - spec.epsilon);
  const Scalar b2 = a * static_cast<Scalar>(1.0 + spec.epsilon);
  const auto [lo, hi] = std::minmax(b1, b2);
  return lo < b && b < hi;
}

template <typename Scalar>
inline Scalar ground_cost_value(Scalar a, Scalar b, CostKind kind) {
  const Scalar diff = a - b;
  return kind == CostKind::squared ? diff * diff : std::abs(diff);
}

namespace detail {

template <typename DerivedQ, typename DerivedC>
inline void check_pair(const Eigen::MatrixBase<DerivedQ>& q, const Eigen::MatrixBase<DerivedC>& c,
                       const ResolvedBand& band, const char* who) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedQ)
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedC)
  if (q.size() == 0 || c.size() == 0) {
    throw std::invalid_argument(std::string(who) + ": empty series");
  }
  if (band.rows != q.size() || band.cols != c.size()) {
    throw std::invalid_argument(std::string(who) + ": band was resolved for different lengths");
  }
}

inline index_t max_window_width(const ResolvedBand& band) {
  if (band.is_unconstrained()) return band.cols;
  return std::min<index_t>(band.cols, 2 * *band.radius + 1);
}

}  // namespace detail

/// Plain Euclidean metric between two equal-length series.
template <typename DerivedQ, typename DerivedC>
typename DerivedQ::Scalar euclidean(const Eigen::MatrixBase<DerivedQ>& q,
                                    const Eigen::MatrixBase<DerivedC>& c) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedQ)
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedC)
  if (q.size() != c.size()) {
    throw std::invalid_argument("euclidean: length mismatch (" + std::to_string(q.size()) +
                                " vs " + std::to_string(c.size()) + ")");
  }
  return (q.derived() - c.derived()).norm();
}

/// Minimum accumulated cost over monotone warping paths whose cells all
/// lie inside the band; out-of-band cells count as +infinity. Boundary:
/// D(0,0) = 0, D(i,0) = D(0,j) = +infinity. Only two band-width rows are
/// kept alive, each aligned to its own window.
template <typename DerivedQ, typename DerivedC>
typename DerivedQ::Scalar dtw_distance(const Eigen::MatrixBase<DerivedQ>& q,
                                       const Eigen::MatrixBase<DerivedC>& c,
                                       const ResolvedBand& band, const GroundCost& cost = {}) {
  using Scalar = typename DerivedQ::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedC::Scalar>,
                "dtw_distance: mixed scalar types");
  detail::check_pair(q, c, band, "dtw_distance");

  const index_t n = q.size();
  const index_t m = c.size();
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  const index_t width = detail::max_window_width(band);

  std::vector<Scalar> prev(static_cast<size_t>(width));
  std::vector<Scalar> curr(static_cast<size_t>(width));

  // Virtual row 0 holds only D(0,0) = 0 at column 0.
  index_t prev_lo = 0, prev_hi = 0;
  prev[0] = Scalar(0);

  for (index_t i = 1; i <= n; ++i) {
    const auto [lo, hi] = band_window(i, band);
    const Scalar qi = q.derived().coeff(i - 1);
    for (index_t j = lo; j <= hi; ++j) {
      const Scalar diag = (j - 1 >= prev_lo && j - 1 <= prev_hi) ? prev[j - 1 - prev_lo] : inf;
      const Scalar up = (j >= prev_lo && j <= prev_hi) ? prev[j - prev_lo] : inf;
      const Scalar left = (j > lo) ? curr[j - 1 - lo] : inf;
      curr[j - lo] = ground_cost_value(qi, c.derived().coeff(j - 1), cost.kind) +
                     std::min(diag, std::min(up, left));
    }
    std::swap(prev, curr);
    prev_lo = lo;
    prev_hi = hi;
  }

  const Scalar total = prev[m - prev_lo];  // hi of the last row is always m
  return cost.final_root ? std::sqrt(total) : total;
}

/// Length of the longest epsilon-matching common subsequence whose
/// matched cells all lie inside the band. Out-of-band cells read as 0.
template <typename DerivedQ, typename DerivedC>
index_t lcs_length(const Eigen::MatrixBase<DerivedQ>& q, const Eigen::MatrixBase<DerivedC>& c,
                   const ResolvedBand& band, const MatchSpec& spec) {
  using Scalar = typename DerivedQ::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedC::Scalar>,
                "lcs_length: mixed scalar types");
  spec.validate();
  detail::check_pair(q, c, band, "lcs_length");

  const index_t n = q.size();
  const index_t m = c.size();
  const index_t width = detail::max_window_width(band);

  std::vector<index_t> prev(static_cast<size_t>(width), 0);
  std::vector<index_t> curr(static_cast<size_t>(width), 0);

  // Row 0 is all zeros: represent it as an empty window.
  index_t prev_lo = 1, prev_hi = 0;

  for (index_t i = 1; i <= n; ++i) {
    const auto [lo, hi] = band_window(i, band);
    const Scalar qi = q.derived().coeff(i - 1);
    for (index_t j = lo; j <= hi; ++j) {
      if (point_match(qi, c.derived().coeff(j - 1), spec)) {
        const index_t diag = (j - 1 >= prev_lo && j - 1 <= prev_hi) ? prev[j - 1 - prev_lo] : 0;
        curr[j - lo] = diag + 1;
      } else {
        const index_t up = (j >= prev_lo && j <= prev_hi) ? prev[j - prev_lo] : 0;
        const index_t left = (j > lo) ? curr[j - 1 - lo] : 0;
        curr[j - lo] = std::max(up, left);
      }
    }
    std::swap(prev, curr);
    prev_lo = lo;
    prev_hi = hi;
  }

  return prev[m - prev_lo];
}

/// LCS turned into a dissimilarity in [0,1]: 1 - L / min(n,m).
template <typename DerivedQ, typename DerivedC>
double lcs_distance(const Eigen::MatrixBase<DerivedQ>& q, const Eigen::MatrixBase<DerivedC>& c,
                    const ResolvedBand& band, const MatchSpec& spec) {
  const index_t len = lcs_length(q, c, band, spec);
  const index_t shorter = std::min(q.size(), c.size());
  return 1.0 - static_cast<double>(len) / static_cast<double>(shorter);
}

}  // namespace tse
