#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tse {

using scalar_t = double;
using index_t = Eigen::Index;
using vector_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, 1>;
using matrix_t = Eigen::Matrix<scalar_t, Eigen::Dynamic, Eigen::Dynamic>;

/// One labeled sequence of real-valued samples. Empty or non-finite
/// sequences are rejected at construction, so everything downstream can
/// assume a well-formed series.
class TimeSeries {
 public:
  TimeSeries(int label, index_t id, vector_t values)
      : label_(label), id_(id), values_(std::move(values)) {
    if (values_.size() == 0) {
      throw std::invalid_argument("TimeSeries: values must be non-empty");
    }
    if (!values_.allFinite()) {
      throw std::invalid_argument("TimeSeries: values must be finite");
    }
    if (id_ < 0) {
      throw std::invalid_argument("TimeSeries: id must be non-negative");
    }
  }

  int label() const { return label_; }
  index_t id() const { return id_; }
  const vector_t& values() const { return values_; }
  index_t length() const { return values_.size(); }

 private:
  int label_;
  index_t id_;
  vector_t values_;
};

/// An ordered collection of series. ids are dense and equal to positions.
struct Dataset {
  std::string name;
  std::vector<TimeSeries> series;
  std::string source_path;
  bool normalized = false;

  index_t size() const { return static_cast<index_t>(series.size()); }
};

}  // namespace tse
