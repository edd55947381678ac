#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tse/config_json.hpp"
#include "tse/dataset_io.hpp"
#include "tse/hashing.hpp"
#include "tse/io_util.hpp"
#include "tse/matrix_engine.hpp"
#include "tse/matrix_io.hpp"
#include "tse/nn_analysis.hpp"

namespace fs = std::filesystem;
using namespace tse;

namespace {

struct CommonOpts {
  std::string measure = "dtw";
  std::optional<double> percent;
  std::vector<double> percents;
  bool unconstrained = false;
  std::string cost = "squared";
  bool root = true;
  double epsilon = 0.25;
  std::string match = "absolute";
  bool normalize = false;
  std::string threads;
  int repeat = 1;
  std::string out = ".";
};

std::string default_threads() {
  const char* env = std::getenv("TSE_THREADS");
  return env && *env ? env : "auto";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool schedule) {
  cmd->add_option("--measure", o.measure, "Similarity measure")
      ->check(CLI::IsMember({"euclidean", "dtw", "lcs"}));
  auto* percent = cmd->add_option("--percent", o.percent,
                                  "Band width as a percentage of series length");
  auto* uncon = cmd->add_flag("--unconstrained", o.unconstrained, "No band constraint");
  percent->excludes(uncon);
  if (schedule) {
    auto* percents =
        cmd->add_option("--percents", o.percents, "Comma-separated band percentages")
            ->delimiter(',');
    percent->excludes(percents);
    percents->excludes(uncon);
  }
  cmd->add_option("--cost", o.cost, "DTW ground cost")
      ->check(CLI::IsMember({"squared", "absolute"}));
  cmd->add_flag("--root,!--no-root", o.root, "Take the square root of the DTW total");
  cmd->add_option("--epsilon", o.epsilon, "LCS matching threshold");
  cmd->add_option("--match", o.match, "LCS matching mode")
      ->check(CLI::IsMember({"relative", "absolute"}));
  cmd->add_flag("--normalize", o.normalize, "z-normalize every series after loading");
  cmd->add_option("--threads", o.threads, "Worker threads (count or 'auto')");
  cmd->add_option("--repeat", o.repeat, "Timed passes; the median wall time is reported")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Output directory");
}

int parse_threads(const std::string& s) {
  if (s == "auto") return 0;
  size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || k < 1) {
    throw std::invalid_argument("--threads expects a positive integer or 'auto', got '" +
                                s + "'");
  }
  return k;
}

MeasureConfig make_config(const CommonOpts& o) {
  MeasureConfig cfg;
  cfg.measure = measure_from_name(o.measure);
  cfg.band = o.percent ? BandSpec::of_percent(*o.percent) : BandSpec::unconstrained();
  cfg.cost.kind = o.cost == "absolute" ? CostKind::absolute : CostKind::squared;
  cfg.cost.final_root = o.root;
  cfg.match.mode = o.match == "relative" ? MatchMode::relative : MatchMode::absolute;
  cfg.match.epsilon = o.epsilon;
  cfg.validate();
  return cfg;
}

Dataset load_input(const std::string& path, bool normalize) {
  Dataset d = load_ucr(path);
  return normalize ? znormalize(d) : d;
}

std::string format_percent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

std::string percent_label(const BandSpec& band) {
  return band.is_unconstrained() ? "unconstrained" : format_percent(*band.percent);
}

std::string band_tag(const BandSpec& band) {
  return band.is_unconstrained() ? "unconstrained" : "p" + format_percent(*band.percent);
}

std::string echo_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

int cmd_dist(const CommonOpts& o, const std::string& file, const std::string& file2,
             const std::vector<long long>& ids) {
  const MeasureConfig cfg = make_config(o);
  const Dataset a = load_input(file, o.normalize);

  index_t qi = 0;
  index_t ci = 1;
  if (!ids.empty()) {
    qi = static_cast<index_t>(ids[0]);
    ci = static_cast<index_t>(ids[1]);
  }
  auto pick = [](const Dataset& d, index_t i) -> const vector_t& {
    if (i < 0 || i >= d.size()) {
      throw std::out_of_range("series id " + std::to_string(i) + " out of range for " +
                              d.name + " with " + std::to_string(d.size()) + " series");
    }
    return d.series[static_cast<size_t>(i)].values();
  };

  const vector_t* q = nullptr;
  const vector_t* c = nullptr;
  Dataset b;
  if (!file2.empty()) {
    b = load_input(file2, o.normalize);
    q = &pick(a, 0);
    c = &pick(b, 0);
  } else {
    q = &pick(a, qi);
    c = &pick(a, ci);
  }

  const scalar_t dist = pair_distance(*q, *c, cfg);
  const ResolvedBand band = resolve_band(cfg.band, q->size(), c->size());
  std::printf("distance=%.17g\n", static_cast<double>(dist));
  if (band.radius) {
    std::printf("radius=%lld\n", static_cast<long long>(*band.radius));
  } else {
    std::printf("radius=unconstrained\n");
  }
  return 0;
}

int cmd_matrix(const CommonOpts& o, const std::string& file, bool csv,
               const std::string& run_config) {
  const MeasureConfig cfg = make_config(o);
  const Dataset d = load_input(file, o.normalize);
  const DistanceMatrix m = compute_matrix(d, cfg, parse_threads(o.threads), o.repeat);

  fs::create_directories(o.out);
  const std::string stem =
      m.dataset_name + "_" + measure_name(cfg.measure) + "_" + band_tag(cfg.band);
  const fs::path dmx = fs::path(o.out) / (stem + ".dmx");
  write_matrix(m, dmx, run_config);
  if (csv) {
    write_matrix_csv(m, fs::path(o.out) / (stem + ".csv"), run_config);
  }

  std::printf("dataset,measure,percent,wall_ms\n");
  std::printf("%s,%s,%s,%.17g\n", m.dataset_name.c_str(),
              measure_name(cfg.measure).c_str(), percent_label(cfg.band).c_str(),
              m.timing.wall_ms);
  std::fprintf(stderr, "wrote %s\n", dmx.string().c_str());
  return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& file, bool save_matrices,
              const std::string& run_config) {
  const MeasureConfig base = make_config(o);
  const Dataset d = load_input(file, o.normalize);

  std::vector<double> schedule = default_schedule();
  if (o.unconstrained) {
    schedule.clear();
  } else if (!o.percents.empty()) {
    schedule = o.percents;
  } else if (o.percent) {
    schedule = {*o.percent};
  }

  SweepOptions opts;
  opts.threads = parse_threads(o.threads);
  opts.repeat = o.repeat;
  if (save_matrices) opts.matrix_dir = fs::path(o.out);
  opts.run_config = run_config;

  const SweepReport report = constraint_sweep(d, base, schedule, opts);

  fs::create_directories(o.out);
  const std::string stem = report.dataset_name + "_" + report.family + "_sweep";
  const fs::path csv = fs::path(o.out) / (stem + ".csv");
  const fs::path json = fs::path(o.out) / (stem + ".json");
  write_sweep_csv(report, csv);
  write_sweep_json(report, json);

  std::printf("percent,wall_ms,change_percent\n");
  for (const SweepRow& row : report.rows) {
    const std::string label = row.percent ? format_percent(*row.percent) : "unconstrained";
    std::printf("%s,%.17g,%.17g\n", label.c_str(), row.wall_ms, row.change_percent);
  }
  std::fprintf(stderr, "wrote %s and %s\n", csv.string().c_str(), json.string().c_str());
  return 0;
}

int cmd_graph_diff(const std::string& file_a, const std::string& file_b) {
  const DistanceMatrix a = read_matrix(file_a);
  const DistanceMatrix b = read_matrix(file_b);
  const double change = graph_change(nn_graph(a), nn_graph(b));
  std::printf("change_percent=%.17g\n", change);
  return 0;
}

struct SweepCsv {
  std::string dataset;
  std::string family;
  std::vector<std::pair<std::string, std::string>> rows;  // percent label, change text
};

SweepCsv parse_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep CSV: " + path);
  SweepCsv out;
  bool header_seen = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# dataset=", 0) == 0) {
      out.dataset = line.substr(10);
    } else if (line.rfind("# family=", 0) == 0) {
      out.family = line.substr(9);
    } else if (line[0] == '#') {
      continue;
    } else if (!header_seen) {
      if (line != "percent,wall_ms,change_percent") {
        throw std::runtime_error(path + ": not a sweep CSV (unexpected header '" + line +
                                 "')");
      }
      header_seen = true;
    } else {
      const size_t c1 = line.find(',');
      const size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
      if (c2 == std::string::npos) {
        throw std::runtime_error(path + ": malformed sweep row '" + line + "'");
      }
      out.rows.emplace_back(line.substr(0, c1), line.substr(c2 + 1));
    }
  }
  if (!header_seen || out.dataset.empty() || out.family.empty()) {
    throw std::runtime_error(path + ": not a sweep CSV (missing header or metadata)");
  }
  return out;
}

int cmd_report(const CommonOpts& o, const std::vector<std::string>& inputs,
               const std::string& run_config) {
  std::vector<SweepCsv> sweeps;
  sweeps.reserve(inputs.size());
  for (const std::string& path : inputs) sweeps.push_back(parse_sweep_csv(path));

  std::vector<std::string> labels;
  for (const SweepCsv& s : sweeps) {
    for (const auto& [label, change] : s.rows) {
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        labels.push_back(label);
      }
    }
  }

  std::string table = "dataset,family";
  for (const std::string& label : labels) table += "," + label;
  table += '\n';
  for (const SweepCsv& s : sweeps) {
    table += s.dataset + "," + s.family;
    for (const std::string& label : labels) {
      table += ',';
      for (const auto& [l, change] : s.rows) {
        if (l == label) {
          table += change;
          break;
        }
      }
    }
    table += '\n';
  }

  fs::create_directories(o.out);
  const fs::path out_path = fs::path(o.out) / "report.csv";
  atomic_write(out_path, [&](std::ostream& os) {
    os << "# run_config=" << run_config << '\n'
       << "# run_config_hash=" << to_hex(fnv1a64(run_config)) << '\n'
       << table;
  });
  std::fputs(table.c_str(), stdout);
  std::fprintf(stderr, "wrote %s\n", out_path.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Elastic similarity for labeled time-series files: banded DTW and LCS, "
      "pairwise distance matrices, and 1NN constraint sweeps"};
  app.require_subcommand(1);

  CommonOpts opt;
  opt.threads = default_threads();

  std::string file;
  std::string file2;
  std::vector<long long> ids;
  bool csv = false;
  bool save_matrices = false;
  std::string diff_a;
  std::string diff_b;
  std::vector<std::string> report_inputs;

  CLI::App* dist = app.add_subcommand("dist", "Distance between two series");
  dist->add_option("file", file, "Dataset file")->required()->check(CLI::ExistingFile);
  auto* dist_file2 =
      dist->add_option("file2", file2, "Second dataset file; series 0 of each is compared")
          ->check(CLI::ExistingFile);
  auto* dist_ids = dist->add_option("--ids", ids, "Two series ids within one file")
                       ->delimiter(',')
                       ->expected(2);
  dist_file2->excludes(dist_ids);
  add_common(dist, opt, false);

  CLI::App* matrix = app.add_subcommand("matrix", "Full pairwise distance matrix");
  matrix->add_option("file", file, "Dataset file")->required()->check(CLI::ExistingFile);
  matrix->add_flag("--csv", csv, "Also export the matrix as CSV");
  add_common(matrix, opt, false);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Constraint sweep: matrices, timings, and 1NN graph change per band");
  sweep->add_option("file", file, "Dataset file")->required()->check(CLI::ExistingFile);
  sweep->add_flag("--save-matrices", save_matrices, "Persist every matrix of the sweep");
  add_common(sweep, opt, true);

  CLI::App* graph_diff =
      app.add_subcommand("graph-diff", "1NN graph change between two matrix files");
  graph_diff->add_option("matrix_a", diff_a, "First matrix file")
      ->required()
      ->check(CLI::ExistingFile);
  graph_diff->add_option("matrix_b", diff_b, "Second matrix file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* report =
      app.add_subcommand("report", "Merge sweep CSVs into one datasets-by-percents table");
  report->add_option("csvs", report_inputs, "Sweep CSV files")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--out", opt.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  const std::string run_config = echo_argv(argc, argv);
  try {
    if (dist->parsed()) return cmd_dist(opt, file, file2, ids);
    if (matrix->parsed()) return cmd_matrix(opt, file, csv, run_config);
    if (sweep->parsed()) return cmd_sweep(opt, file, save_matrices, run_config);
    if (graph_diff->parsed()) return cmd_graph_diff(diff_a, diff_b);
    if (report->parsed()) return cmd_report(opt, report_inputs, run_config);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
