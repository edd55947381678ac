#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "tse/matrix_engine.hpp"
#include "tse/matrix_io.hpp"

using namespace tse;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& stem, const std::string& ext) {
  static std::mt19937 rng(std::random_device{}());
  return fs::temp_directory_path() / (stem + "_" + std::to_string(rng()) + ext);
}

Dataset two_identical() {
  Dataset d;
  d.name = "twins";
  vector_t v(4);
  v << 0.1, 0.7, -0.2, 0.4;
  d.series.emplace_back(1, 0, v);
  d.series.emplace_back(1, 1, v);
  return d;
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  REQUIRE(out);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("identical series give an all-zero matrix") {
  MeasureConfig cfg;
  cfg.band = BandSpec::of_percent(10);
  const DistanceMatrix m = compute_matrix(two_identical(), cfg);
  CHECK(m.values == matrix_t::Zero(2, 2));
  CHECK(m.timing.pair_count == 1);
  CHECK(m.size() == 2);
}

TEST_CASE("triangle pair count and diagonal") {
  std::mt19937 rng(21);
  const Dataset d = testutil::random_dataset(rng, 3, 12);
  const DistanceMatrix m = compute_matrix(d, MeasureConfig{});
  CHECK(m.timing.pair_count == 3);
  for (index_t i = 0; i < 3; ++i) CHECK(m.values(i, i) == 0.0);
  CHECK(m.values == m.values.transpose().eval());
}

TEST_CASE("values are identical across thread counts and repeats") {
  std::mt19937 rng(22);
  const Dataset d = testutil::random_dataset(rng, 8, 20);
  MeasureConfig cfg;
  cfg.band = BandSpec::of_percent(25);
  const DistanceMatrix a = compute_matrix(d, cfg, 1, 1);
  const DistanceMatrix b = compute_matrix(d, cfg, 4, 2);
  CHECK(a.values == b.values);
  CHECK(b.timing.threads == 4);
}

TEST_CASE("mirrored triangle equals a naive both-triangle evaluation") {
  std::mt19937 rng(23);
  const Dataset d = testutil::random_dataset(rng, 6, 15);

  for (const Measure measure : {Measure::dtw, Measure::lcs}) {
    MeasureConfig cfg;
    cfg.measure = measure;
    cfg.band = BandSpec::of_percent(40);
    const DistanceMatrix m = compute_matrix(d, cfg, 3);
    for (index_t i = 0; i < d.size(); ++i) {
      for (index_t j = 0; j < d.size(); ++j) {
        const scalar_t expected =
            i == j ? 0.0
                   : pair_distance(d.series[static_cast<size_t>(i)].values(),
                                   d.series[static_cast<size_t>(j)].values(), cfg);
        CHECK(m.values(i, j) == expected);
      }
    }
  }
}

TEST_CASE("relative-epsilon lcs evaluates both orientations") {
  Dataset d;
  d.name = "aniso";
  vector_t a(1), b(1);
  a << 10.0;
  b << 11.0;
  d.series.emplace_back(0, 0, a);
  d.series.emplace_back(0, 1, b);

  MeasureConfig cfg;
  cfg.measure = Measure::lcs;
  cfg.match = MatchSpec{0.1, MatchMode::relative};
  CHECK_FALSE(cfg.symmetric());

  const DistanceMatrix m = compute_matrix(d, cfg);
  CHECK(m.values(0, 1) == 1.0);  // 10 does not admit 11 under the strict bound
  CHECK(m.values(1, 0) == 0.0);  // 11 admits 10
  CHECK(m.timing.pair_count == 2);
}

TEST_CASE("matrix computation rejects bad input") {
  Dataset one;
  one.name = "one";
  vector_t v(3);
  v << 1, 2, 3;
  one.series.emplace_back(0, 0, v);
  CHECK_THROWS_AS(compute_matrix(one, MeasureConfig{}), std::invalid_argument);

  Dataset ragged;
  ragged.name = "ragged";
  vector_t w(2);
  w << 1, 2;
  ragged.series.emplace_back(0, 0, v);
  ragged.series.emplace_back(0, 1, w);
  MeasureConfig euc;
  euc.measure = Measure::euclidean;
  CHECK_THROWS_WITH_AS(compute_matrix(ragged, euc),
                       "euclidean requires equal lengths: series 0 has 3 samples, series 1 has 2",
                       std::invalid_argument);
}

TEST_CASE("binary container round-trips field by field") {
  std::mt19937 rng(24);
  const Dataset d = testutil::random_dataset(rng, 5, 18);
  MeasureConfig cfg;
  cfg.measure = Measure::lcs;
  cfg.band = BandSpec::of_percent(20);
  cfg.match = MatchSpec{0.3, MatchMode::absolute};
  const DistanceMatrix m = compute_matrix(d, cfg, 2);

  const fs::path path = temp_path("tse_matrix", ".dmx");
  write_matrix(m, path, "unit-test run");
  const DistanceMatrix back = read_matrix(path);
  fs::remove(path);

  CHECK(back.dataset_name == m.dataset_name);
  CHECK(back.normalized == m.normalized);
  CHECK(back.config.measure == m.config.measure);
  CHECK(back.config.band.percent == m.config.band.percent);
  CHECK(back.config.cost.kind == m.config.cost.kind);
  CHECK(back.config.cost.final_root == m.config.cost.final_root);
  CHECK(back.config.match.epsilon == m.config.match.epsilon);
  CHECK(back.config.match.mode == m.config.match.mode);
  CHECK(back.values == m.values);
  CHECK(back.timing.wall_ms == m.timing.wall_ms);
  CHECK(back.timing.pair_count == m.timing.pair_count);
  CHECK(back.timing.threads == m.timing.threads);
  CHECK(back.timing.host == m.timing.host);
}

TEST_CASE("asymmetric matrices round-trip all rows") {
  Dataset d;
  d.name = "aniso";
  vector_t a(2), b(2);
  a << 10.0, 20.0;
  b << 11.0, 19.0;
  d.series.emplace_back(0, 0, a);
  d.series.emplace_back(0, 1, b);
  MeasureConfig cfg;
  cfg.measure = Measure::lcs;
  cfg.match = MatchSpec{0.1, MatchMode::relative};
  const DistanceMatrix m = compute_matrix(d, cfg);
  REQUIRE(m.values(0, 1) != m.values(1, 0));

  const fs::path path = temp_path("tse_aniso", ".dmx");
  write_matrix(m, path);
  const DistanceMatrix back = read_matrix(path);
  fs::remove(path);
  CHECK(back.values == m.values);
}

TEST_CASE("truncated and corrupted files fail the checksum") {
  const DistanceMatrix m = compute_matrix(two_identical(), MeasureConfig{});
  const fs::path path = temp_path("tse_trunc", ".dmx");
  write_matrix(m, path);
  std::vector<char> bytes = slurp(path);

  std::vector<char> truncated(bytes.begin(), bytes.end() - 5);
  spit(path, truncated);
  CHECK_THROWS_AS(read_matrix(path), MatrixIoError);
  try {
    read_matrix(path);
  } catch (const MatrixIoError& e) {
    CHECK(e.kind == MatrixIoError::Kind::checksum);
  }

  std::vector<char> corrupted = bytes;
  corrupted[corrupted.size() - 12] ^= 0x40;
  spit(path, corrupted);
  try {
    read_matrix(path);
    FAIL("corrupted file was accepted");
  } catch (const MatrixIoError& e) {
    CHECK(e.kind == MatrixIoError::Kind::checksum);
  }
  fs::remove(path);
}

TEST_CASE("unknown version and foreign files are rejected cleanly") {
  const DistanceMatrix m = compute_matrix(two_identical(), MeasureConfig{});
  const fs::path path = temp_path("tse_version", ".dmx");
  write_matrix(m, path);
  std::vector<char> bytes = slurp(path);
  bytes[8] = 9;  // version field sits right after the 8-byte magic
  spit(path, bytes);
  try {
    read_matrix(path);
    FAIL("future version was accepted");
  } catch (const MatrixIoError& e) {
    CHECK(e.kind == MatrixIoError::Kind::version);
  }

  spit(path, {'h', 'e', 'l', 'l', 'o', '\n'});
  try {
    read_matrix(path);
    FAIL("text file was accepted");
  } catch (const MatrixIoError& e) {
    CHECK(e.kind == MatrixIoError::Kind::format);
  }
  fs::remove(path);

  CHECK_THROWS_AS(read_matrix(fs::temp_directory_path() / "tse_missing.dmx"), MatrixIoError);
}

TEST_CASE("csv export lists ids and full-precision values") {
  Dataset d;
  d.name = "csv";
  vector_t a(2), b(2);
  a << 0.0, 0.0;
  b << 3.0, 4.0;
  d.series.emplace_back(0, 0, a);
  d.series.emplace_back(0, 1, b);
  MeasureConfig cfg;
  cfg.measure = Measure::euclidean;
  const DistanceMatrix m = compute_matrix(d, cfg);

  const fs::path path = temp_path("tse_csv", ".csv");
  write_matrix_csv(m, path, "unit-test run");
  std::ifstream in(path);
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,0,1");
  std::getline(in, line);
  CHECK(line == "0,0,5");
  std::getline(in, line);
  CHECK(line == "1,5,0");
  std::getline(in, line);
  CHECK(line.rfind("# run_config_hash=", 0) == 0);
  in.close();
  fs::remove(path);
}
