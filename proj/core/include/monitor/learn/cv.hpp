#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/spec.hpp"

namespace monitor::learn {

struct FoldPlan {
  int k = 0;
  std::vector<int> fold_of;  // row -> fold id
  bool stratified = true;
  std::uint64_t seed = 0;

  std::vector<std::size_t> train_rows(int fold) const;
  std::vector<std::size_t> test_rows(int fold) const;
};

/// Rows of each class are shuffled, the classes are laid end to end, and
/// position i goes to fold i mod k. Fold sizes differ by at most one and
/// each class is spread within one row per fold.
FoldPlan stratified_kfold(const data::Labels& y, int k, std::uint64_t seed);

/// Reports each fit made during cross-validation, so callers can audit that
/// no row is predicted by a model that saw it.
struct FoldEvent {
  int repeat = 0;
  int fold = 0;
  std::span<const std::size_t> train_rows;
  std::span<const std::size_t> predicted_rows;
};
using FoldObserver = std::function<void(const FoldEvent&)>;

struct CvResult {
  std::vector<FoldPlan> plans;            // one per repeat
  std::vector<double> fold_accuracy;      // repeat-major, k per repeat
  std::vector<std::vector<double>> oof;   // [repeat][row] out-of-fold P(fake)

  double mean_accuracy() const;
  /// Per-row mean of the out-of-fold probabilities over repeats.
  std::vector<double> mean_oof() const;
};

/// Repeat r uses the fold plan seeded by derive(seed, r).
CvResult cross_validate(const ClassifierSpec& spec, const data::FeatureMatrix& x,
                        const data::Labels& y, int k, int repeats, std::uint64_t seed,
                        const FoldObserver& observer = {});

/// Same folds for every candidate of a comparison.
CvResult cross_validate(const ClassifierSpec& spec, const data::FeatureMatrix& x,
                        const data::Labels& y, const FoldPlan& plan,
                        const FoldObserver& observer = {});

}  // namespace monitor::learn
