#pragma once

#include <cstdint>
#include <string>

#include "tse/constraints.hpp"
#include "tse/measures.hpp"
#include "tse/types.hpp"

namespace tse {

enum class Measure { euclidean, dtw, lcs };

std::string measure_name(Measure m);
Measure measure_from_name(const std::string& name);

/// Everything needed to reproduce one pairwise distance: the measure and
/// its parameters. Embedded verbatim in every artifact it produces.
struct MeasureConfig {
  Measure measure = Measure::dtw;
  BandSpec band;     // ignored for euclidean
  GroundCost cost;   // dtw only
  MatchSpec match;   // lcs only

  void validate() const;

  /// Relative epsilon matching is not symmetric, so those matrices are
  /// evaluated in both orientations instead of mirroring the triangle.
  bool symmetric() const {
    return !(measure == Measure::lcs && match.mode == MatchMode::relative);
  }
};

struct TimingRecord {
  double wall_ms = 0.0;        // wall clock for the whole matrix
  std::int64_t pair_count = 0; // number of distance evaluations
  int threads = 1;
  std::string host;
};

struct DistanceMatrix {
  std::string dataset_name;
  bool normalized = false;
  MeasureConfig config;
  matrix_t values;
  TimingRecord timing;

  index_t size() const { return values.rows(); }
};

/// One distance under `config`, band resolved for this pair's lengths.
scalar_t pair_distance(const vector_t& q, const vector_t& c, const MeasureConfig& config);

/// Computes the full pairwise matrix. Symmetric configurations evaluate
/// the upper triangle only and mirror it; work is split over `threads`
/// contiguous chunks of row-major pair indices (0 or negative = one per
/// hardware thread). Values are identical for every thread count.
/// `repeat` re-runs the computation and records the median wall time.
DistanceMatrix compute_matrix(const Dataset& dataset, const MeasureConfig& config,
                              int threads = 0, int repeat = 1);

/// Free-form description of this machine, recorded in timing metadata.
std::string host_description();

}  // namespace tse
