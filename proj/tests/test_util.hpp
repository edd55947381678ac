#pragma once

#include <random>
#include <string>

#include "tse/types.hpp"

namespace testutil {

inline tse::vector_t uniform_series(std::mt19937& rng, tse::index_t len, double lo = -1.0,
                                    double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  tse::vector_t v(len);
  for (tse::index_t i = 0; i < len; ++i) v[i] = u(rng);
  return v;
}

inline tse::vector_t random_walk(std::mt19937& rng, tse::index_t len) {
  std::uniform_real_distribution<double> start(-1.0, 1.0);
  std::normal_distribution<double> step(0.0, 0.25);
  tse::vector_t v(len);
  double x = start(rng);
  for (tse::index_t i = 0; i < len; ++i) {
    x += step(rng);
    v[i] = x;
  }
  return v;
}

inline tse::Dataset random_dataset(std::mt19937& rng, int count, tse::index_t len,
                                   const std::string& name = "synthetic") {
  tse::Dataset d;
  d.name = name;
  d.source_path = "<generated>";
  for (int k = 0; k < count; ++k) {
    d.series.emplace_back(k % 4, k, random_walk(rng, len));
  }
  return d;
}

}  // namespace testutil
