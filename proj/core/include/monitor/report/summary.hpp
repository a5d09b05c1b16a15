#pragma once

#include <span>
#include <string>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/model.hpp"

namespace monitor::report {

struct ImportanceEntry {
  std::string feature;
  double importance = 0.0;
};

/// Mean impurity decrease of a random forest, normalized to sum 1, sorted
/// descending (ties by name). Throws kInvalidArgument for other model kinds.
std::vector<ImportanceEntry> feature_importance(const learn::TrainedModel& rf);

/// Linear interpolation between order statistics (the "type 7" rule):
/// h = (n - 1) p, value = x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
double quantile(std::span<const double> sorted, double p);

struct FiveNumber {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  friend bool operator==(const FiveNumber&, const FiveNumber&) = default;
};

FiveNumber five_number(std::vector<double> values);

struct DistributionSummary {
  std::string feature;
  int label = 0;
  std::size_t count = 0;
  FiveNumber stats;
};

/// One summary per (feature, class) for classes that occur, feature-major.
std::vector<DistributionSummary> class_distribution_summary(const data::FeatureMatrix& x);

}  // namespace monitor::report
