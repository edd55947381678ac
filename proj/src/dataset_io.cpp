#include "tse/dataset_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace tse {

namespace {

// Splits on commas if the line contains one, else on any whitespace run.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= line.size()) {
      size_t end = line.find(',', start);
      if (end == std::string_view::npos) end = line.size();
      std::string_view field = line.substr(start, end - start);
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
        field.remove_prefix(1);
      }
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
        field.remove_suffix(1);
      }
      fields.push_back(field);
      if (end == line.size()) break;
      start = end + 1;
    }
  } else {
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      fields.push_back(line.substr(start, i - start));
    }
  }
  return fields;
}

double parse_field(std::string_view field, const std::filesystem::path& path, size_t line_no,
                   size_t col_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty() || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << path.string() << ":" << line_no << ": field " << col_no << " is not a finite number ('"
        << std::string(field) << "')";
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

Dataset load_ucr(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open dataset file: " + path.string());
  }

  Dataset dataset;
  dataset.name = path.stem().string();
  dataset.source_path = path.string();

  std::string line;
  size_t line_no = 0;
  index_t next_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;  // blank line
    if (fields.size() < 2) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": expected a label and at least one sample, got "
          << fields.size() << " field(s)";
      throw ParseError(msg.str());
    }
    // Labels may be stored as reals ("1.0000000e+00"); truncate to int.
    const double raw_label = parse_field(fields[0], path, line_no, 1);
    const int label = static_cast<int>(raw_label);

    vector_t values(static_cast<index_t>(fields.size() - 1));
    for (size_t k = 1; k < fields.size(); ++k) {
      values[static_cast<index_t>(k - 1)] = parse_field(fields[k], path, line_no, k + 1);
    }
    dataset.series.emplace_back(label, next_id++, std::move(values));
  }
  return dataset;
}

void save_ucr(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open file for writing: " + path.string());
  }
  char buf[40];
  for (const auto& s : dataset.series) {
    out << s.label();
    for (index_t i = 0; i < s.length(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", s.values()[i]);
      out << ' ' << buf;
    }
    out << '\n';
  }
  if (!out) {
    throw ParseError("failed while writing: " + path.string());
  }
}

TimeSeries znormalize(const TimeSeries& s) {
  const auto& v = s.values();
  const double mean = v.mean();
  const double variance = (v.array() - mean).square().sum() / static_cast<double>(v.size());
  const double stddev = std::sqrt(variance);
  if (stddev < 1e-12) {
    return TimeSeries(s.label(), s.id(), vector_t::Zero(v.size()));
  }
  return TimeSeries(s.label(), s.id(), ((v.array() - mean) / stddev).matrix());
}

Dataset znormalize(const Dataset& dataset) {
  Dataset out;
  out.name = dataset.name;
  out.source_path = dataset.source_path;
  out.normalized = true;
  out.series.reserve(dataset.series.size());
  for (const auto& s : dataset.series) {
    out.series.push_back(znormalize(s));
  }
  return out;
}

}  // namespace tse
