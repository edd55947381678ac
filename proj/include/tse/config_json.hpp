#pragma once

#include <nlohmann/json_fwd.hpp>

#include "tse/matrix_engine.hpp"

// JSON round-tripping for configuration and timing records, used by the
// matrix container header and the sweep reports.
namespace tse {

void to_json(nlohmann::json& j, const BandSpec& b);
void from_json(const nlohmann::json& j, BandSpec& b);

void to_json(nlohmann::json& j, const GroundCost& c);
void from_json(const nlohmann::json& j, GroundCost& c);

void to_json(nlohmann::json& j, const MatchSpec& m);
void from_json(const nlohmann::json& j, MatchSpec& m);

void to_json(nlohmann::json& j, const MeasureConfig& c);
void from_json(const nlohmann::json& j, MeasureConfig& c);

void to_json(nlohmann::json& j, const TimingRecord& t);
void from_json(const nlohmann::json& j, TimingRecord& t);

/// Canonical single-line JSON for a config, used for hashing.
std::string config_to_string(const MeasureConfig& c);

}  // namespace tse
