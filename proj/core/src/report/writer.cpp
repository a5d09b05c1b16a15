#include "monitor/report/writer.hpp"

#include <fstream>

#include "json.hpp"
#include "monitor/data/csv.hpp"
#include "monitor/data/feature_matrix.hpp"
#include "monitor/error.hpp"

namespace monitor::report {
namespace {

using data::format_double;

std::ofstream open(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + p.string());
  return out;
}

}  // namespace

void write_report(const EvaluationReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (const auto& m : r.models) {
    const auto& c = m.metrics.confusion;
    models.push_back({{"model", m.name},
                      {"rows", m.rows},
                      {"accuracy", m.metrics.accuracy},
                      {"precision", m.metrics.precision},
                      {"recall", m.metrics.recall},
                      {"f1", m.metrics.f1},
                      {"auc", m.roc.auc},
                      {"confusion", {{"tn", c[0][0]}, {"fp", c[0][1]}, {"fn", c[1][0]}, {"tp", c[1][1]}}}});
    auto roc = open(dir / ("roc_" + m.name + ".csv"));
    for (const auto& [fpr, tpr] : m.roc.points) roc << format_double(fpr) << ',' << format_double(tpr) << '\n';
  }
  open(dir / "metrics.json") << nlohmann::ordered_json{{"positive_class", "fake"}, {"models", models}}.dump(1)
                             << '\n';

  auto imp = open(dir / "importance.csv");
  imp << "feature,importance\n";
  for (const auto& e : r.importance)
    imp << data::csv::escape(e.feature) << ',' << format_double(e.importance) << '\n';

  auto dist = open(dir / "distributions.csv");
  dist << "feature,class,count,min,q1,median,q3,max\n";
  for (const auto& d : r.distributions)
    dist << data::csv::escape(d.feature) << ',' << (d.label == 1 ? "fake" : "real") << ','
         << d.count << ',' << format_double(d.stats.min) << ',' << format_double(d.stats.q1) << ','
         << format_double(d.stats.median) << ',' << format_double(d.stats.q3) << ','
         << format_double(d.stats.max) << '\n';

  auto folds = open(dir / "folds.csv");
  folds << "model,repeat,fold,accuracy\n";
  for (const auto& f : r.folds)
    folds << data::csv::escape(f.model) << ',' << f.repeat << ',' << f.fold << ','
          << format_double(f.accuracy) << '\n';
}

}  // namespace monitor::report
