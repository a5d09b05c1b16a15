#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "monitor/report/metrics.hpp"
#include "monitor/report/summary.hpp"

namespace monitor::report {

struct ModelEvaluation {
  std::string name;  // used in roc_<name>.csv
  Metrics metrics;
  RocCurve roc;
  std::size_t rows = 0;
};

struct FoldScore {
  std::string model;
  int repeat = 0;
  int fold = 0;
  double accuracy = 0.0;
};

struct EvaluationReport {
  std::vector<ModelEvaluation> models;
  std::vector<ImportanceEntry> importance;
  std::vector<DistributionSummary> distributions;
  std::vector<FoldScore> folds;
};

/// Writes metrics.json, roc_<model>.csv (one per model, no header, rows
/// `fpr,tpr`), importance.csv, distributions.csv and folds.csv. Every file is
/// written even when its table is empty.
void write_report(const EvaluationReport& r, const std::filesystem::path& dir);

}  // namespace monitor::report
