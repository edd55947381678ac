#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tse/matrix_engine.hpp"

namespace tse {

/// Directed 1-nearest-neighbor graph: nn[i] is the id of series i's nearest
/// neighbor under the matrix it was built from, i itself excluded.
struct NNGraph {
  std::string dataset_name;
  MeasureConfig config;
  std::vector<index_t> nn;
};

/// nn[i] = argmin over j != i of m.values(i, j); ties go to the smallest id.
NNGraph nn_graph(const DistanceMatrix& m);

/// Percentage of nodes whose nearest neighbor differs from the reference.
/// Throws std::invalid_argument when the graphs cover different datasets.
double graph_change(const NNGraph& g, const NNGraph& ref);

/// Stable 64-bit digest of the neighbor assignment, as 16 hex characters.
std::string graph_fingerprint(const NNGraph& g);

struct SweepRow {
  std::optional<double> percent;  ///< nullopt marks the unconstrained reference row.
  double wall_ms = 0.0;
  double change_percent = 0.0;
};

struct SweepReport {
  std::string dataset_name;
  std::string family;          ///< measure name of base_config
  MeasureConfig base_config;   ///< band cleared to unconstrained
  std::vector<SweepRow> rows;  ///< rows[0] is the unconstrained reference
  std::string reference_fingerprint;
  std::string host;
  int threads = 1;
  std::string config_hash;
  std::string run_config;  ///< invocation echo carried into every artifact
};

struct SweepOptions {
  int threads = 0;  ///< <= 0 picks the hardware concurrency
  int repeat = 1;   ///< wall_ms is the median of this many timed passes
  std::optional<std::filesystem::path> matrix_dir;  ///< persist matrices when set
  std::string run_config;  ///< echoed into persisted artifacts
};

/// Default band schedule: 75, 50, 25, 20, 15, 10, 5, 1, 0 percent.
const std::vector<double>& default_schedule();

/// Computes the unconstrained matrix and graph first, then one matrix per
/// schedule entry, each timed in isolation and compared against the reference
/// graph. Nothing is written until every entry has succeeded.
SweepReport constraint_sweep(const Dataset& dataset, MeasureConfig base,
                             const std::vector<double>& schedule = default_schedule(),
                             const SweepOptions& options = {});

/// One row per schedule entry: percent,wall_ms,change_percent. Leading `#`
/// comment lines carry the config, environment, and fingerprint.
void write_sweep_csv(const SweepReport& report, const std::filesystem::path& path);

/// Full structured form of the report, config and environment included.
void write_sweep_json(const SweepReport& report, const std::filesystem::path& path);

}  // namespace tse
