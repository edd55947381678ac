#include "tse/matrix_io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "tse/config_json.hpp"
#include "tse/hashing.hpp"
#include "tse/io_util.hpp"

namespace tse {

namespace {

constexpr char kMagic[8] = {'T', 'S', 'E', 'M', 'A', 'T', 'R', 'X'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::vector<char>& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::vector<char>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64(std::vector<char>& buf, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  put_u64(buf, bits);
}

struct Reader {
  const std::vector<char>& buf;
  size_t pos = 0;

  void need(size_t n) const {
    if (pos + n > buf.size()) {
      throw MatrixIoError(MatrixIoError::Kind::checksum,
                          "matrix file is truncated (checksum cannot be verified)");
    }
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  double f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
  }
};

}  // namespace

std::string default_run_config(const DistanceMatrix& m) {
  return "api matrix dataset=" + m.dataset_name +
         " normalized=" + (m.normalized ? "true" : "false") +
         " config=" + config_to_string(m.config);
}

void write_matrix(const DistanceMatrix& m, const std::filesystem::path& path,
                  const std::string& run_config) {
  const index_t n = m.size();
  const bool full = !m.config.symmetric();
  const std::string run = run_config.empty() ? default_run_config(m) : run_config;

  nlohmann::json header{{"dataset", m.dataset_name},
                        {"normalized", m.normalized},
                        {"n", n},
                        {"storage", full ? "full" : "triangle"},
                        {"config", m.config},
                        {"timing", m.timing},
                        {"run_config", run},
                        {"run_config_hash", to_hex(fnv1a64(run))}};
  const std::string header_text = header.dump();

  std::vector<char> buf;
  buf.reserve(64 + header_text.size() + static_cast<size_t>(n) * static_cast<size_t>(n) * 8);
  buf.insert(buf.end(), kMagic, kMagic + sizeof kMagic);
  put_u32(buf, kVersion);
  buf.push_back(full ? 1 : 0);
  put_u64(buf, static_cast<std::uint64_t>(n));
  put_u64(buf, header_text.size());
  buf.insert(buf.end(), header_text.begin(), header_text.end());

  if (full) {
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) put_f64(buf, m.values(i, j));
    }
  } else {
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = i + 1; j < n; ++j) put_f64(buf, m.values(i, j));
    }
  }
  put_u32(buf, crc32(buf.data(), buf.size()));

  atomic_write(path, [&](std::ostream& out) { out.write(buf.data(), static_cast<std::streamsize>(buf.size())); },
               /*binary=*/true);
}

DistanceMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MatrixIoError(MatrixIoError::Kind::open, "cannot open matrix file: " + path.string());
  }
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < sizeof kMagic || std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0) {
    throw MatrixIoError(MatrixIoError::Kind::format,
                        "not a matrix container: " + path.string());
  }
  Reader r{buf, sizeof kMagic};
  const std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw MatrixIoError(MatrixIoError::Kind::version,
                        "matrix container version " + std::to_string(version) +
                            " is not supported (expected " + std::to_string(kVersion) + ")");
  }

  // Verify the checksum before trusting anything past the version tag.
  if (buf.size() < 4) {
    throw MatrixIoError(MatrixIoError::Kind::checksum, "matrix file is truncated");
  }
  const size_t body_len = buf.size() - 4;
  Reader tail{buf, body_len};
  const std::uint32_t stored_crc = tail.u32();
  if (crc32(buf.data(), body_len) != stored_crc) {
    throw MatrixIoError(MatrixIoError::Kind::checksum,
                        "matrix file checksum mismatch (truncated or corrupted): " + path.string());
  }

  r.need(1);
  const bool full = buf[r.pos++] != 0;
  const auto n = static_cast<index_t>(r.u64());
  const auto header_len = static_cast<size_t>(r.u64());
  r.need(header_len);
  const std::string header_text(buf.data() + r.pos, header_len);
  r.pos += header_len;

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_text);
  } catch (const nlohmann::json::exception& e) {
    throw MatrixIoError(MatrixIoError::Kind::format,
                        "bad matrix header: " + std::string(e.what()));
  }

  DistanceMatrix m;
  m.dataset_name = header.at("dataset").get<std::string>();
  m.normalized = header.at("normalized").get<bool>();
  header.at("config").get_to(m.config);
  header.at("timing").get_to(m.timing);
  m.values = matrix_t::Zero(n, n);

  if (full) {
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) m.values(i, j) = r.f64();
    }
  } else {
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = i + 1; j < n; ++j) {
        const double v = r.f64();
        m.values(i, j) = v;
        m.values(j, i) = v;
      }
    }
  }
  if (r.pos != body_len) {
    throw MatrixIoError(MatrixIoError::Kind::format, "matrix payload has trailing bytes");
  }
  return m;
}

void write_matrix_csv(const DistanceMatrix& m, const std::filesystem::path& path,
                      const std::string& run_config) {
  const index_t n = m.size();
  const std::string run = run_config.empty() ? default_run_config(m) : run_config;
  atomic_write(path, [&](std::ostream& out) {
    out << "id";
    for (index_t j = 0; j < n; ++j) out << ',' << j;
    out << '\n';
    char cell[40];
    for (index_t i = 0; i < n; ++i) {
      out << i;
      for (index_t j = 0; j < n; ++j) {
        std::snprintf(cell, sizeof cell, "%.17g", m.values(i, j));
        out << ',' << cell;
      }
      out << '\n';
    }
    out << "# run_config_hash=" << to_hex(fnv1a64(run)) << '\n';
  });
}

}  // namespace tse
