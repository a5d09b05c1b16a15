#include "monitor/report/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monitor/error.hpp"

namespace monitor::report {

Metrics classification_metrics(std::span<const int> y_true, std::span<const int> y_pred) {
  require(y_true.size() == y_pred.size(), ErrorKind::kInvalidArgument,
          "metrics: label vectors differ in length");
  require(!y_true.empty(), ErrorKind::kInvalidArgument, "metrics: no rows");
  Metrics m;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    require((y_true[i] == 0 || y_true[i] == 1) && (y_pred[i] == 0 || y_pred[i] == 1),
            ErrorKind::kInvalidArgument, "metrics: labels must be 0 or 1");
    ++m.confusion[y_true[i]][y_pred[i]];
  }
  const double tp = static_cast<double>(m.confusion[1][1]);
  const double fp = static_cast<double>(m.confusion[0][1]);
  const double fn = static_cast<double>(m.confusion[1][0]);
  const double tn = static_cast<double>(m.confusion[0][0]);
  m.accuracy = (tp + tn) / static_cast<double>(y_true.size());
  m.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  return m;
}

RocCurve roc_curve(std::span<const int> y_true, std::span<const double> scores) {
  require(y_true.size() == scores.size(), ErrorKind::kInvalidArgument,
          "roc: labels and scores differ in length");
  long pos = 0, neg = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    require(std::isfinite(scores[i]), ErrorKind::kInvalidArgument, "roc: scores must be finite");
    require(y_true[i] == 0 || y_true[i] == 1, ErrorKind::kInvalidArgument,
            "roc: labels must be 0 or 1");
    (y_true[i] == 1 ? pos : neg) += 1;
  }
  require(pos > 0 && neg > 0, ErrorKind::kSingleClass, "roc: labels hold a single class");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  RocCurve c;
  c.points.emplace_back(0.0, 0.0);
  long tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (y_true[order[j]] == 1 ? tp : fp) += 1;
      ++j;
    }
    const double fpr = static_cast<double>(fp) / static_cast<double>(neg);
    const double tpr = static_cast<double>(tp) / static_cast<double>(pos);
    const auto& prev = c.points.back();
    c.auc += (fpr - prev.first) * (tpr + prev.second) / 2.0;
    c.points.emplace_back(fpr, tpr);
    i = j;
  }
  return c;
}

}  // namespace monitor::report
