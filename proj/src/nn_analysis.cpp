#include "tse/nn_analysis.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "tse/config_json.hpp"
#include "tse/hashing.hpp"
#include "tse/io_util.hpp"
#include "tse/matrix_io.hpp"

namespace tse {

namespace {

std::string format_percent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

std::string band_tag(const BandSpec& band) {
  return band.is_unconstrained() ? "unconstrained" : "p" + format_percent(*band.percent);
}

}  // namespace

NNGraph nn_graph(const DistanceMatrix& m) {
  const index_t n = m.size();
  if (n < 2) {
    throw std::invalid_argument("nn_graph requires at least two series, got " +
                                std::to_string(n));
  }
  NNGraph g;
  g.dataset_name = m.dataset_name;
  g.config = m.config;
  g.nn.resize(static_cast<size_t>(n));
  for (index_t i = 0; i < n; ++i) {
    index_t best = i == 0 ? 1 : 0;
    for (index_t j = best + 1; j < n; ++j) {
      if (j != i && m.values(i, j) < m.values(i, best)) best = j;
    }
    g.nn[static_cast<size_t>(i)] = best;
  }
  return g;
}

double graph_change(const NNGraph& g, const NNGraph& ref) {
  if (g.dataset_name != ref.dataset_name || g.nn.size() != ref.nn.size()) {
    throw std::invalid_argument("graph_change: graphs cover different datasets (" +
                                g.dataset_name + " with " + std::to_string(g.nn.size()) +
                                " nodes vs " + ref.dataset_name + " with " +
                                std::to_string(ref.nn.size()) + ")");
  }
  size_t changed = 0;
  for (size_t i = 0; i < g.nn.size(); ++i) changed += g.nn[i] != ref.nn[i];
  return 100.0 * static_cast<double>(changed) / static_cast<double>(g.nn.size());
}

std::string graph_fingerprint(const NNGraph& g) {
  std::uint64_t h = fnv1a64(nullptr, 0);
  for (const index_t id : g.nn) {
    const auto v = static_cast<std::uint64_t>(id);
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>((v >> (8 * b)) & 0xFF);
    h = fnv1a64(bytes, sizeof bytes, h);
  }
  return to_hex(h);
}

const std::vector<double>& default_schedule() {
  static const std::vector<double> schedule{75, 50, 25, 20, 15, 10, 5, 1, 0};
  return schedule;
}

SweepReport constraint_sweep(const Dataset& dataset, MeasureConfig base,
                             const std::vector<double>& schedule,
                             const SweepOptions& options) {
  base.band = BandSpec::unconstrained();
  base.validate();

  SweepReport report;
  report.dataset_name = dataset.name;
  report.family = measure_name(base.measure);
  report.base_config = base;
  report.host = host_description();
  report.config_hash = to_hex(fnv1a64(config_to_string(base)));
  report.run_config = options.run_config.empty()
                          ? "api sweep dataset=" + dataset.name +
                                " config=" + config_to_string(base)
                          : options.run_config;

  DistanceMatrix ref = compute_matrix(dataset, base, options.threads, options.repeat);
  const NNGraph ref_graph = nn_graph(ref);
  report.reference_fingerprint = graph_fingerprint(ref_graph);
  report.threads = ref.timing.threads;
  report.rows.push_back({std::nullopt, ref.timing.wall_ms, 0.0});

  std::vector<DistanceMatrix> kept;
  if (options.matrix_dir) kept.push_back(std::move(ref));

  for (const double percent : schedule) {
    MeasureConfig cfg = base;
    cfg.band = BandSpec::of_percent(percent);
    DistanceMatrix m = compute_matrix(dataset, cfg, options.threads, options.repeat);
    const NNGraph g = nn_graph(m);
    report.rows.push_back({percent, m.timing.wall_ms, graph_change(g, ref_graph)});
    if (options.matrix_dir) kept.push_back(std::move(m));
  }

  // All entries succeeded; only now touch the filesystem.
  if (options.matrix_dir) {
    std::filesystem::create_directories(*options.matrix_dir);
    for (const DistanceMatrix& m : kept) {
      const std::string stem =
          dataset.name + "_" + report.family + "_" + band_tag(m.config.band);
      write_matrix(m, *options.matrix_dir / (stem + ".dmx"), report.run_config);
    }
  }
  return report;
}

void write_sweep_csv(const SweepReport& report, const std::filesystem::path& path) {
  atomic_write(path, [&](std::ostream& out) {
    out << "# dataset=" << report.dataset_name << '\n'
        << "# family=" << report.family << '\n'
        << "# config=" << config_to_string(report.base_config) << '\n'
        << "# config_hash=" << report.config_hash << '\n'
        << "# reference_fingerprint=" << report.reference_fingerprint << '\n'
        << "# host=" << report.host << '\n'
        << "# threads=" << report.threads << '\n'
        << "# run_config=" << report.run_config << '\n'
        << "# run_config_hash=" << to_hex(fnv1a64(report.run_config)) << '\n'
        << "percent,wall_ms,change_percent\n";
    char buf[40];
    for (const SweepRow& row : report.rows) {
      if (row.percent) {
        out << format_percent(*row.percent);
      } else {
        out << "unconstrained";
      }
      std::snprintf(buf, sizeof buf, "%.17g", row.wall_ms);
      out << ',' << buf;
      std::snprintf(buf, sizeof buf, "%.17g", row.change_percent);
      out << ',' << buf << '\n';
    }
  });
}

void write_sweep_json(const SweepReport& report, const std::filesystem::path& path) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::json jr{{"wall_ms", row.wall_ms}, {"change_percent", row.change_percent}};
    if (row.percent) {
      jr["percent"] = *row.percent;
    } else {
      jr["percent"] = nullptr;
    }
    rows.push_back(std::move(jr));
  }
  const nlohmann::json doc{{"dataset", report.dataset_name},
                           {"family", report.family},
                           {"config", report.base_config},
                           {"config_hash", report.config_hash},
                           {"reference_fingerprint", report.reference_fingerprint},
                           {"host", report.host},
                           {"threads", report.threads},
                           {"run_config", report.run_config},
                           {"run_config_hash", to_hex(fnv1a64(report.run_config))},
                           {"rows", rows}};
  atomic_write(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

}  // namespace tse
