#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "monitor/error.hpp"
#include "monitor/learn/model.hpp"
#include "monitor/report/metrics.hpp"
#include "monitor/report/summary.hpp"
#include "monitor/report/writer.hpp"
#include "monitor/rng.hpp"

using namespace monitor;
using namespace monitor::report;

namespace {

std::vector<std::string> lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string s; std::getline(in, s);) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("metrics on the hand-computed confusion") {
  const Metrics m = classification_metrics(std::vector<int>{1, 1, 0, 0}, std::vector<int>{1, 0, 0, 0});
  CHECK(m.accuracy == 0.75);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 0.5);
  CHECK(m.f1 == 2.0 / 3.0);
  CHECK(m.confusion[1][1] == 1);
  CHECK(m.confusion[1][0] == 1);
  CHECK(m.confusion[0][0] == 2);
  CHECK(m.confusion[0][1] == 0);
}

TEST_CASE("perfect and inverted predictions") {
  const std::vector<int> y{1, 0, 1, 0};
  const Metrics p = classification_metrics(y, y);
  CHECK(p.accuracy == 1.0);
  CHECK(p.precision == 1.0);
  CHECK(p.recall == 1.0);
  CHECK(p.f1 == 1.0);
  const Metrics w = classification_metrics(y, std::vector<int>{0, 1, 0, 1});
  CHECK(w.accuracy == 0.0);
  CHECK(w.precision == 0.0);
  CHECK(w.recall == 0.0);
  CHECK(w.f1 == 0.0);
  CHECK_THROWS_AS(classification_metrics(y, std::vector<int>{1}), Error);
}

TEST_CASE("metrics ignore row order") {
  const std::vector<int> y{1, 0, 0, 1, 1, 0, 1}, p{1, 1, 0, 0, 1, 0, 1};
  const std::vector<int> yr(y.rbegin(), y.rend()), pr(p.rbegin(), p.rend());
  const Metrics a = classification_metrics(y, p), b = classification_metrics(yr, pr);
  CHECK(a.accuracy == b.accuracy);
  CHECK(a.f1 == b.f1);
}

TEST_CASE("ROC examples") {
  CHECK(roc_curve(std::vector<int>{1, 0, 1, 0}, std::vector<double>{0.9, 0.8, 0.4, 0.1}).auc == 0.75);
  CHECK(roc_curve(std::vector<int>{1, 1, 0}, std::vector<double>{0.9, 0.8, 0.1}).auc == 1.0);
  const RocCurve flat = roc_curve(std::vector<int>{1, 0, 1}, std::vector<double>{0.3, 0.3, 0.3});
  CHECK(flat.auc == 0.5);
  CHECK(flat.points.size() == 2);
  CHECK_THROWS_AS(roc_curve(std::vector<int>{1, 1}, std::vector<double>{0.1, 0.2}), Error);
}

TEST_CASE("AUC equals the pair statistic on random small cases") {
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng.below(11);
    std::vector<int> y(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<int>(rng.below(2));
      s[i] = static_cast<double>(rng.below(5)) / 4.0;
    }
    y[0] = 0;
    y[1] = 1;
    const RocCurve c = roc_curve(y, s);
    CHECK(std::abs(c.auc - oracle::mann_whitney_auc(y, s)) < 1e-12);
    CHECK(c.points.front() == std::pair<double, double>{0.0, 0.0});
    CHECK(c.points.back() == std::pair<double, double>{1.0, 1.0});
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      CHECK(c.points[i].first >= c.points[i - 1].first);
      CHECK(c.points[i].second >= c.points[i - 1].second);
    }
  }
}

TEST_CASE("type 7 quantiles") {
  const std::vector<double> five{1, 2, 3, 4, 5};
  CHECK(quantile(five, 0.25) == 2.0);
  CHECK(quantile(five, 0.75) == 4.0);
  const std::vector<double> four{1, 2, 3, 4};
  CHECK(quantile(four, 0.5) == 2.5);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(1 + rng.below(12));
    for (auto& x : v) x = rng.normal();
    std::sort(v.begin(), v.end());
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0})
      CHECK(quantile(v, p) == doctest::Approx(oracle::quantile_type7(v, p)).epsilon(1e-12));
  }
  const FiveNumber f = five_number({5, 1, 4, 2, 3});
  CHECK(f == FiveNumber{1, 2, 3, 4, 5});
}

TEST_CASE("class-conditional summaries") {
  const auto m = fixtures::matrix({"a"}, {{1}, {1}, {2}, {2}, {3}, {3}, {4}, {4}}, {0, 1, 0, 1, 0, 1, 0, 1});
  const auto s = class_distribution_summary(m);
  REQUIRE(s.size() == 2);
  CHECK(s[0].stats == s[1].stats);
  CHECK(s[0].stats.median == 2.5);
  CHECK(s[0].count == 4);
  CHECK_THROWS_AS(class_distribution_summary(fixtures::matrix({"a"}, {{1}})), Error);
}

TEST_CASE("forest importances") {
  Rng rng(2);
  std::vector<std::vector<double>> rows;
  std::vector<int> y;
  for (int i = 0; i < 120; ++i) {
    const int label = i % 2;
    rows.push_back({rng.normal(), label + 0.01 * rng.normal(), 7.0});
    y.push_back(label);
  }
  const auto x = fixtures::matrix({"noise", "key", "flat"}, rows, y);
  const auto rf = learn::fit({learn::ModelKind::kRf, {{"n_estimators", 20.0}}, 3}, x);
  const auto imp = feature_importance(rf);
  REQUIRE(imp.size() == 3);
  CHECK(imp.front().feature == "key");
  CHECK(imp.back().feature == "flat");
  CHECK(imp.back().importance == 0.0);
  double total = 0;
  for (const auto& e : imp) total += e.importance;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  const auto knn = learn::fit({learn::ModelKind::kKnn, {{"n_neighbors", 3.0}}, 0}, x);
  CHECK_THROWS_AS(feature_importance(knn), Error);
}

TEST_CASE("report directory layout") {
  const auto dir = fixtures::scratch("report_layout");
  EvaluationReport r;
  const std::vector<int> y{1, 0, 1, 0};
  const std::vector<double> s{0.9, 0.8, 0.4, 0.1};
  r.models.push_back({"stacking", classification_metrics(y, std::vector<int>{1, 1, 0, 0}),
                      roc_curve(y, s), 4});
  r.importance = {{"a", 0.7}, {"b", 0.3}};
  r.distributions = class_distribution_summary(fixtures::matrix({"a"}, {{1}, {2}}, {0, 1}));
  r.folds = {{"cart", 0, 0, 0.5}, {"cart", 0, 1, 1.0}};
  write_report(r, dir);
  for (const char* f : {"metrics.json", "roc_stacking.csv", "importance.csv", "distributions.csv",
                        "folds.csv"})
    CHECK(std::filesystem::exists(dir / f));
  const auto roc = lines(dir / "roc_stacking.csv");
  CHECK(roc.front() == "0,0");
  CHECK(roc.back() == "1,1");
  std::ifstream in(dir / "metrics.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j.dump().find("stacking") != std::string::npos);
  CHECK(lines(dir / "distributions.csv").size() == 3);
}
