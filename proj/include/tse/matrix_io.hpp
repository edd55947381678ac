#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "tse/matrix_engine.hpp"

namespace tse {

struct MatrixIoError : std::runtime_error {
  enum class Kind { open, format, version, checksum };
  Kind kind;
  MatrixIoError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

/// Self-describing binary container: magic, version, a JSON text header
/// (dataset, config, timing, run configuration), the matrix payload as
/// 64-bit reals, and a trailing CRC-32 over everything before it.
/// Symmetric matrices store the row-major strict upper triangle;
/// asymmetric ones (relative-epsilon LCS) store all rows in full.
void write_matrix(const DistanceMatrix& m, const std::filesystem::path& path,
                  const std::string& run_config = "");

DistanceMatrix read_matrix(const std::filesystem::path& path);

/// Plain-text export: header row `id,0,1,...,N-1`, then one row per
/// series with full-precision values. A trailing `#` comment carries the
/// run-configuration hash.
void write_matrix_csv(const DistanceMatrix& m, const std::filesystem::path& path,
                      const std::string& run_config = "");

/// The run-configuration string an artifact records when the caller did
/// not supply one (programmatic use rather than the CLI).
std::string default_run_config(const DistanceMatrix& m);

}  // namespace tse
