#include "tse/matrix_engine.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tse {

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::euclidean: return "euclidean";
    case Measure::dtw: return "dtw";
    case Measure::lcs: return "lcs";
  }
  return "?";
}

Measure measure_from_name(const std::string& name) {
  if (name == "euclidean") return Measure::euclidean;
  if (name == "dtw") return Measure::dtw;
  if (name == "lcs") return Measure::lcs;
  throw std::invalid_argument("unknown measure: " + name);
}

void MeasureConfig::validate() const {
  if (band.percent && !(*band.percent >= 0.0 && *band.percent <= 100.0)) {
    throw std::invalid_argument("MeasureConfig: band percent outside [0,100]");
  }
  if (measure == Measure::lcs) match.validate();
}

scalar_t pair_distance(const vector_t& q, const vector_t& c, const MeasureConfig& config) {
  switch (config.measure) {
    case Measure::euclidean:
      return euclidean(q, c);
    case Measure::dtw:
      return dtw_distance(q, c, resolve_band(config.band, q.size(), c.size()), config.cost);
    case Measure::lcs:
      return lcs_distance(q, c, resolve_band(config.band, q.size(), c.size()), config.match);
  }
  throw std::logic_error("pair_distance: unreachable");
}

namespace {

// Row-major enumeration of the strict upper triangle: k -> (i, j), i < j.
std::pair<index_t, index_t> triangle_pair(index_t k, index_t n) {
  index_t i = 0;
  index_t row_len = n - 1;
  while (k >= row_len) {
    k -= row_len;
    ++i;
    --row_len;
  }
  return {i, i + 1 + k};
}

// Row-major enumeration of all ordered pairs with i != j.
std::pair<index_t, index_t> ordered_pair(index_t k, index_t n) {
  const index_t i = k / (n - 1);
  const index_t r = k % (n - 1);
  return {i, r < i ? r : r + 1};
}

void check_equal_lengths(const Dataset& dataset) {
  const index_t len0 = dataset.series[0].length();
  for (const auto& s : dataset.series) {
    if (s.length() != len0) {
      std::ostringstream msg;
      msg << "euclidean requires equal lengths: series " << dataset.series[0].id() << " has "
          << len0 << " samples, series " << s.id() << " has " << s.length();
      throw std::invalid_argument(msg.str());
    }
  }
}

void fill_values(const Dataset& dataset, const MeasureConfig& config, int threads,
                 matrix_t& values) {
  const index_t n = dataset.size();
  const bool symmetric = config.symmetric();
  const index_t total = symmetric ? n * (n - 1) / 2 : n * (n - 1);

  auto run_range = [&](index_t begin, index_t end) {
    for (index_t k = begin; k < end; ++k) {
      const auto [i, j] = symmetric ? triangle_pair(k, n) : ordered_pair(k, n);
      const scalar_t d =
          pair_distance(dataset.series[static_cast<size_t>(i)].values(),
                        dataset.series[static_cast<size_t>(j)].values(), config);
      values(i, j) = d;
      if (symmetric) values(j, i) = d;
    }
  };

  if (threads <= 1 || total < 2) {
    run_range(0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (index_t t = 0; t < threads; ++t) {
    const index_t begin = total * t / threads;
    const index_t end = total * (t + 1) / threads;
    pool.emplace_back(run_range, begin, end);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

DistanceMatrix compute_matrix(const Dataset& dataset, const MeasureConfig& config, int threads,
                              int repeat) {
  config.validate();
  const index_t n = dataset.size();
  if (n < 2) {
    throw std::invalid_argument("compute_matrix: dataset needs at least 2 series");
  }
  if (config.measure == Measure::euclidean) check_equal_lengths(dataset);
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  if (repeat < 1) repeat = 1;

  DistanceMatrix out;
  out.dataset_name = dataset.name;
  out.normalized = dataset.normalized;
  out.config = config;
  out.values = matrix_t::Zero(n, n);

  std::vector<double> wall_times;
  wall_times.reserve(static_cast<size_t>(repeat));
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fill_values(dataset, config, threads, out.values);
    const auto stop = std::chrono::steady_clock::now();
    wall_times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(wall_times.begin(), wall_times.end());
  const size_t mid = wall_times.size() / 2;
  const double median = wall_times.size() % 2 == 1
                            ? wall_times[mid]
                            : 0.5 * (wall_times[mid - 1] + wall_times[mid]);

  out.timing.wall_ms = median;
  out.timing.pair_count = config.symmetric() ? n * (n - 1) / 2 : n * (n - 1);
  out.timing.threads = threads;
  out.timing.host = host_description();
  return out;
}

std::string host_description() {
  utsname u{};
  if (uname(&u) != 0) return "unknown";
  return std::string(u.nodename) + " " + u.machine + " " + u.sysname;
}

}  // namespace tse
