#pragma once

#include <cstdint>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/spec.hpp"

namespace monitor::learn {

/// The hyperparameter grid of each kind, in lexicographic (name, value) order:
///   cart: criterion {entropy, gini} x max_depth 1..21             (42)
///   knn:  n_neighbors 1..21                                         (21)
///   svm:  C 0.1..2.0 step 0.1 x gamma 0.1..1.0 step 0.1 x 4 kernels;
///         the linear kernel ignores gamma so it appears once per C  (620)
///   rf:   max_depth {3,5,10,15,20} x n_estimators {10,50,100,200,500} (25)
///   logreg: C = 1 only
std::vector<ClassifierSpec> default_grid(ModelKind kind, std::uint64_t seed = 0);

struct GridResult {
  ClassifierSpec best;
  double best_score = 0.0;
  std::vector<std::pair<ClassifierSpec, double>> scores;  // candidate order
};

/// Highest mean k-fold accuracy wins; among equal scores the candidate whose
/// parameter map is lexicographically smallest wins. All candidates share one
/// stratified fold plan.
GridResult grid_search(const std::vector<ClassifierSpec>& candidates, const data::FeatureMatrix& x,
                       const data::Labels& y, int folds, std::uint64_t seed);
GridResult grid_search(ModelKind kind, const data::FeatureMatrix& x, const data::Labels& y,
                       int folds = 5, std::uint64_t seed = 0);

}  // namespace monitor::learn
