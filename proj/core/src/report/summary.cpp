#include "monitor/report/summary.hpp"

#include <algorithm>
#include <cmath>

#include "monitor/error.hpp"

namespace monitor::report {

std::vector<ImportanceEntry> feature_importance(const learn::TrainedModel& rf) {
  const auto* forest = std::get_if<learn::RandomForest>(&rf.estimator);
  require(rf.spec.kind == learn::ModelKind::kRf && forest != nullptr,
          ErrorKind::kInvalidArgument, "feature importance needs a random forest");
  std::vector<ImportanceEntry> out;
  for (std::size_t i = 0; i < rf.feature_names.size(); ++i)
    out.push_back({rf.feature_names[i], forest->importance.at(i)});
  std::sort(out.begin(), out.end(), [](const ImportanceEntry& a, const ImportanceEntry& b) {
    if (a.importance != b.importance) return a.importance > b.importance;
    return a.feature < b.feature;
  });
  return out;
}

double quantile(std::span<const double> sorted, double p) {
  require(!sorted.empty(), ErrorKind::kInvalidArgument, "quantile of an empty sample");
  require(p >= 0.0 && p <= 1.0, ErrorKind::kInvalidArgument, "quantile level outside [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

FiveNumber five_number(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return {quantile(values, 0.0), quantile(values, 0.25), quantile(values, 0.5),
          quantile(values, 0.75), quantile(values, 1.0)};
}

std::vector<DistributionSummary> class_distribution_summary(const data::FeatureMatrix& x) {
  require(x.has_labels(), ErrorKind::kInvalidArgument, "distribution summary needs labels");
  const data::Labels& y = x.labels();
  std::vector<DistributionSummary> out;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (int label : {0, 1}) {
      std::vector<double> v;
      for (std::size_t r = 0; r < x.rows(); ++r)
        if (y[r] == label) v.push_back(x.at(r, c));
      if (v.empty()) continue;
      const std::size_t n = v.size();
      out.push_back({x.column_names()[c], label, n, five_number(std::move(v))});
    }
  }
  return out;
}

}  // namespace monitor::report
