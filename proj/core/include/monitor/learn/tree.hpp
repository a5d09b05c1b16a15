#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monitor/learn/matrix.hpp"

namespace monitor::learn {

enum class Criterion { kGini, kEntropy };

struct TreeOptions {
  int max_depth = 0;     // 0 = grow until pure or unsplittable
  Criterion criterion = Criterion::kGini;
  int max_features = 0;  // features drawn per split; 0 = all
  std::uint64_t seed = 0;
};

/// Leaves have feature = -1. Internal nodes send x[feature] <= threshold left.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double positive = 0.0;  // fraction of fake training rows reaching the node
  int samples = 0;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;     // root first
  std::vector<double> importance;  // impurity decrease per feature, sums to 1 (or all 0)

  double predict_positive(std::span<const double> x) const;
  int depth() const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

/// CART with midpoint thresholds between consecutive distinct values. An
/// impure node is split even when the best split has zero gain, so an
/// unlimited tree fits any consistent training set. `rows` selects (and may
/// repeat) training rows; empty means all rows.
DecisionTree fit_tree(const Matrix& x, const std::vector<int>& y, const TreeOptions& options,
                      std::span<const std::size_t> rows = {});

struct RandomForest {
  std::vector<DecisionTree> trees;
  std::vector<double> importance;  // mean of per-tree importances, normalized

  double predict_positive(std::span<const double> x) const;

  friend bool operator==(const RandomForest&, const RandomForest&) = default;
};

struct ForestOptions {
  int n_estimators = 100;
  int max_depth = 0;
  Criterion criterion = Criterion::kGini;
  std::uint64_t seed = 0;
};

/// Bootstrap rows and floor(sqrt(d)) candidate features per split; tree t
/// draws from its own stream derived from (seed, t).
RandomForest fit_forest(const Matrix& x, const std::vector<int>& y, const ForestOptions& options);

}  // namespace monitor::learn
