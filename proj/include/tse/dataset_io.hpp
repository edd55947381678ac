#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "tse/types.hpp"

namespace tse {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Loads a labeled time-series file: one series per line, class label
/// first, samples after. Fields split on commas when the line contains
/// one, otherwise on whitespace. Series lengths may differ.
Dataset load_ucr(const std::filesystem::path& path);

/// Writes a dataset back out in the same text format, one series per
/// line, with enough digits to re-parse every sample exactly.
void save_ucr(const Dataset& dataset, const std::filesystem::path& path);

/// Rescales to mean 0 and population standard deviation 1. A series
/// whose deviation is below 1e-12 comes back as all zeros.
TimeSeries znormalize(const TimeSeries& s);

/// Normalizes every series and marks the dataset accordingly.
Dataset znormalize(const Dataset& dataset);

}  // namespace tse
