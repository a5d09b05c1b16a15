#pragma once

#include <span>
#include <vector>

#include "monitor/learn/matrix.hpp"

namespace monitor::learn {

/// Euclidean k-nearest neighbours. Equal distances are resolved by training
/// row order, and the positive probability is the fake share of the k votes.
struct KnnModel {
  int k = 5;
  Matrix x;
  std::vector<int> y;

  double predict_positive(std::span<const double> query) const;

  friend bool operator==(const KnnModel&, const KnnModel&) = default;
};

KnnModel fit_knn(const Matrix& x, const std::vector<int>& y, int k);

}  // namespace monitor::learn
