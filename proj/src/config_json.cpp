#include "tse/config_json.hpp"

#include <nlohmann/json.hpp>

namespace tse {

void to_json(nlohmann::json& j, const BandSpec& b) {
  j = nlohmann::json{{"percent", nullptr}};
  if (b.percent) j["percent"] = *b.percent;
}

void from_json(const nlohmann::json& j, BandSpec& b) {
  const auto& p = j.at("percent");
  b.percent = p.is_null() ? std::nullopt : std::optional<double>(p.get<double>());
}

void to_json(nlohmann::json& j, const GroundCost& c) {
  j = nlohmann::json{{"kind", c.kind == CostKind::squared ? "squared" : "absolute"},
                     {"final_root", c.final_root}};
}

void from_json(const nlohmann::json& j, GroundCost& c) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "squared") {
    c.kind = CostKind::squared;
  } else if (kind == "absolute") {
    c.kind = CostKind::absolute;
  } else {
    throw std::invalid_argument("unknown cost kind: " + kind);
  }
  c.final_root = j.at("final_root").get<bool>();
}

void to_json(nlohmann::json& j, const MatchSpec& m) {
  j = nlohmann::json{{"epsilon", m.epsilon},
                     {"mode", m.mode == MatchMode::relative ? "relative" : "absolute"}};
}

void from_json(const nlohmann::json& j, MatchSpec& m) {
  m.epsilon = j.at("epsilon").get<double>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "relative") {
    m.mode = MatchMode::relative;
  } else if (mode == "absolute") {
    m.mode = MatchMode::absolute;
  } else {
    throw std::invalid_argument("unknown match mode: " + mode);
  }
}

void to_json(nlohmann::json& j, const MeasureConfig& c) {
  j = nlohmann::json{{"measure", measure_name(c.measure)},
                     {"band", c.band},
                     {"cost", c.cost},
                     {"match", c.match}};
}

void from_json(const nlohmann::json& j, MeasureConfig& c) {
  c.measure = measure_from_name(j.at("measure").get<std::string>());
  j.at("band").get_to(c.band);
  j.at("cost").get_to(c.cost);
  j.at("match").get_to(c.match);
}

void to_json(nlohmann::json& j, const TimingRecord& t) {
  j = nlohmann::json{{"wall_ms", t.wall_ms},
                     {"pair_count", t.pair_count},
                     {"threads", t.threads},
                     {"host", t.host}};
}

void from_json(const nlohmann::json& j, TimingRecord& t) {
  t.wall_ms = j.at("wall_ms").get<double>();
  t.pair_count = j.at("pair_count").get<std::int64_t>();
  t.threads = j.at("threads").get<int>();
  t.host = j.at("host").get<std::string>();
}

std::string config_to_string(const MeasureConfig& c) {
  return nlohmann::json(c).dump();
}

}  // namespace tse
