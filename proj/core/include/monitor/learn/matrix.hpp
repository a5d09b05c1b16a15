#pragma once

#include <Eigen/Core>

#include "monitor/data/feature_matrix.hpp"

namespace monitor::learn {

/// Row-major so a sample is one contiguous row.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Matrix to_matrix(const data::FeatureMatrix& m);

/// Throws kSingleClass unless both labels 0 and 1 occur; kInvalidArgument on
/// other label values or a length mismatch.
void require_binary_labels(const data::Labels& y, std::size_t rows);

}  // namespace monitor::learn
