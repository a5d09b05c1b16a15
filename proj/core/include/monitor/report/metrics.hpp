#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace monitor::report {

/// Fake (1) is the positive class. confusion[truth][prediction].
struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::array<std::array<long, 2>, 2> confusion{};
};

Metrics classification_metrics(std::span<const int> y_true, std::span<const int> y_pred);

struct RocCurve {
  std::vector<std::pair<double, double>> points;  // (fpr, tpr) from (0,0) to (1,1)
  double auc = 0.0;
};

/// Thresholds sweep the distinct scores from high to low; rows with equal
/// scores enter together, so ties contribute a diagonal segment. AUC by the
/// trapezoid rule.
RocCurve roc_curve(std::span<const int> y_true, std::span<const double> scores);

}  // namespace monitor::report
