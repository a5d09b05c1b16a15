#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "monitor/error.hpp"
#include "monitor/learn/cv.hpp"
#include "monitor/learn/grid.hpp"
#include "monitor/learn/model.hpp"
#include "monitor/rng.hpp"

using namespace monitor;
using namespace monitor::learn;

namespace {

ClassifierSpec spec(ModelKind kind, Params p, std::uint64_t seed = 1) {
  return ClassifierSpec{kind, std::move(p), seed};
}

double accuracy(const data::Labels& a, const data::Labels& b) {
  double ok = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ok += a[i] == b[i] ? 1 : 0;
  return ok / static_cast<double>(a.size());
}

data::FeatureMatrix xor_table() {
  return fixtures::matrix({"a", "b"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}},
                          {0, 1, 1, 0, 0, 1, 1, 0});
}

// One column, classes split at 0.5 with a margin.
data::FeatureMatrix separable(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  std::vector<int> y;
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    rows.push_back({label ? 0.6 + 0.4 * rng.uniform() : 0.4 * rng.uniform(), rng.uniform()});
    y.push_back(label);
  }
  return fixtures::matrix({"x", "noise"}, rows, y);
}

std::vector<ClassifierSpec> one_of_each() {
  return {spec(ModelKind::kCart, {{"max_depth", 4.0}, {"criterion", std::string("gini")}}),
          spec(ModelKind::kKnn, {{"n_neighbors", 5.0}}),
          spec(ModelKind::kSvm, {{"C", 1.0}, {"gamma", 0.5}, {"kernel", std::string("rbf")}}),
          spec(ModelKind::kRf, {{"n_estimators", 10.0}, {"max_depth", 5.0}}),
          spec(ModelKind::kLogreg, {{"C", 1.0}})};
}

}  // namespace

TEST_CASE("spec parsing and validation") {
  CHECK(parse_model_kind("rf") == ModelKind::kRf);
  CHECK_THROWS_AS(parse_model_kind("gbm"), Error);
  CHECK_THROWS_AS(validate(spec(ModelKind::kKnn, {{"n_neighbors", 0.0}})), Error);
  CHECK_THROWS_AS(validate(spec(ModelKind::kCart, {{"depth", 3.0}})), Error);
  CHECK_NOTHROW(validate(default_spec(ModelKind::kSvm)));
}

TEST_CASE("conformance: every learner kind") {
  const auto train = fixtures::blobs(120, 3, 2.0, 5);
  const auto test = fixtures::blobs(40, 3, 2.0, 6);
  const auto dir = fixtures::scratch("learn_conformance");
  for (const auto& s : one_of_each()) {
    CAPTURE(s.describe());
    const TrainedModel a = fit(s, train);
    const TrainedModel b = fit(s, train);
    CHECK(a == b);
    const Eigen::MatrixXd p = predict_proba(a, test);
    REQUIRE(p.rows() == 40);
    REQUIRE(p.cols() == 2);
    for (Eigen::Index r = 0; r < p.rows(); ++r) {
      CHECK(std::abs(p(r, 0) + p(r, 1) - 1.0) <= 1e-9);
      CHECK(p(r, 1) >= 0.0);
      CHECK(p(r, 1) <= 1.0);
    }
    CHECK(accuracy(predict_labels(a, test), test.labels()) >= 0.75);
    const auto path = dir / (std::string(to_string(s.kind)) + ".json");
    save_model(a, path);
    const TrainedModel back = load_model(path);
    CHECK(back == a);
    CHECK(predict_positive(back, test) == predict_positive(a, test));
  }
}

TEST_CASE("single-class training is refused") {
  const auto m = fixtures::matrix({"a"}, {{1}, {2}, {3}}, {1, 1, 1});
  for (const auto& s : one_of_each()) CHECK_THROWS_AS(fit(s, m), Error);
  try {
    fit(one_of_each()[0], m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSingleClass);
  }
}

TEST_CASE("prediction checks columns by name") {
  const auto train = fixtures::blobs(40, 3, 2.0, 1);
  const TrainedModel m = fit(spec(ModelKind::kCart, {{"max_depth", 3.0}}), train);
  const std::vector<std::string> reordered{"f2", "f0", "f1"};
  CHECK(predict_positive(m, train.select_columns(reordered)) == predict_positive(m, train));
  const std::vector<std::string> fewer{"f0", "f2"};
  try {
    predict_positive(m, train.select_columns(fewer));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFeatureMismatch);
    CHECK(std::string(e.what()).find("f1") != std::string::npos);
  }
}

TEST_CASE("a depth-1 tree cannot separate XOR") {
  const auto x = xor_table();
  const TrainedModel m = fit(spec(ModelKind::kCart, {{"max_depth", 1.0}}), x);
  const double acc = accuracy(predict_labels(m, x), x.labels());
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < x.rows(); ++r) rows.emplace_back(x.row(r).begin(), x.row(r).end());
  CHECK(acc <= 0.75);
  CHECK(acc <= oracle::best_stump_accuracy(rows, x.labels()));
}

TEST_CASE("an unlimited tree fits consistent data") {
  const auto x = xor_table();
  const TrainedModel m = fit(spec(ModelKind::kCart, {{"max_depth", 0.0}}), x);
  CHECK(accuracy(predict_labels(m, x), x.labels()) == 1.0);
  const auto noisy = fixtures::blobs(200, 2, 0.5, 3);
  const TrainedModel n = fit(spec(ModelKind::kCart, {}), noisy);
  CHECK(accuracy(predict_labels(n, noisy), noisy.labels()) == 1.0);
}

TEST_CASE("KNN with k=1 recalls distinct training points") {
  const auto x = fixtures::blobs(60, 2, 0.0, 9);
  const TrainedModel m = fit(spec(ModelKind::kKnn, {{"n_neighbors", 1.0}}), x);
  CHECK(accuracy(predict_labels(m, x), x.labels()) == 1.0);
}

TEST_CASE("KNN k=3 with a 2:1 fake vote") {
  const auto x = fixtures::matrix({"v"}, {{0.0}, {1.0}, {2.0}, {100.0}}, {1, 1, 0, 0});
  const TrainedModel m = fit(spec(ModelKind::kKnn, {{"n_neighbors", 3.0}}), x);
  const Eigen::MatrixXd p = predict_proba(m, fixtures::matrix({"v"}, {{1.0}}));
  CHECK(p(0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(p(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("KNN with k=n predicts the class prior") {
  const auto x = fixtures::blobs(31, 2, 1.0, 2);
  const double prior =
      std::accumulate(x.labels().begin(), x.labels().end(), 0.0) / static_cast<double>(x.rows());
  const TrainedModel m = fit(spec(ModelKind::kKnn, {{"n_neighbors", 31.0}}), x);
  for (double p : predict_positive(m, fixtures::blobs(10, 2, 5.0, 8))) CHECK(p == prior);
}

TEST_CASE("KNN agrees with the vote oracle") {
  Rng rng(44);
  std::vector<std::vector<double>> rows{{0, 0}, {1, 1}};
  std::vector<int> y{0, 1};
  for (int i = 0; i < 48; ++i) {
    rows.push_back({rng.uniform(), rng.uniform()});
    y.push_back(static_cast<int>(rng.below(2)));
  }
  const auto x = fixtures::matrix({"a", "b"}, rows, y);
  for (int k : {1, 3, 7}) {
    const TrainedModel m = fit(spec(ModelKind::kKnn, {{"n_neighbors", double(k)}}), x);
    for (int q = 0; q < 20; ++q) {
      const std::vector<double> query{rng.uniform(), rng.uniform()};
      const auto qm = fixtures::matrix({"a", "b"}, {query});
      CHECK(predict_positive(m, qm)[0] == oracle::knn_fake_share(rows, y, query, k));
    }
  }
}

TEST_CASE("logistic regression with zero weights is undecided") {
  const auto x = fixtures::blobs(20, 2, 1.0, 1);
  TrainedModel m = fit(spec(ModelKind::kLogreg, {}), x);
  m.estimator = LogisticModel{Eigen::VectorXd::Zero(2), 0.0};
  const Eigen::MatrixXd p = predict_proba(m, x);
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    CHECK(p(r, 0) == 0.5);
    CHECK(p(r, 1) == 0.5);
  }
  CHECK(threshold_labels({0.5, 0.49}) == data::Labels{1, 0});
}

TEST_CASE("random forest is deterministic under a fixed seed") {
  const auto x = fixtures::blobs(100, 4, 1.0, 12);
  const auto s = spec(ModelKind::kRf, {{"n_estimators", 10.0}}, 77);
  CHECK(predict_positive(fit(s, x), x) == predict_positive(fit(s, x), x));
  const TrainedModel model = fit(s, x);
  const auto& forest = std::get<RandomForest>(model.estimator);
  CHECK(forest.trees.size() == 10);
  CHECK(std::accumulate(forest.importance.begin(), forest.importance.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("SVM probabilities come from Platt scaling") {
  const auto x = separable(60, 3);
  const TrainedModel m = fit(spec(ModelKind::kSvm, {{"C", 1.0}, {"kernel", std::string("linear")}}), x);
  const auto& svm = std::get<SvmModel>(m.estimator);
  CHECK(svm.platt_a < 0.0);
  CHECK(accuracy(predict_labels(m, x), x.labels()) == 1.0);
}

TEST_CASE("stratified folds on exactly divisible data") {
  data::Labels y;
  for (int i = 0; i < 10; ++i) y.push_back(i % 2);
  const FoldPlan p = stratified_kfold(y, 5, 3);
  for (int f = 0; f < 5; ++f) {
    const auto rows = p.test_rows(f);
    REQUIRE(rows.size() == 2);
    CHECK(y[rows[0]] + y[rows[1]] == 1);
  }
  CHECK(stratified_kfold(y, 5, 3).fold_of == p.fold_of);
  CHECK(stratified_kfold(y, 5, 4).fold_of != p.fold_of);
}

TEST_CASE("11 rows in 5 folds") {
  data::Labels y{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
  const FoldPlan p = stratified_kfold(y, 5, 1);
  std::vector<std::size_t> sizes;
  for (int f = 0; f < 5; ++f) sizes.push_back(p.test_rows(f).size());
  std::sort(sizes.rbegin(), sizes.rend());
  CHECK(sizes == std::vector<std::size_t>{3, 2, 2, 2, 2});
  for (int f = 0; f < 5; ++f) {
    int fake = 0;
    for (auto r : p.test_rows(f)) fake += y[r];
    CHECK(fake == 1);
    CHECK(p.train_rows(f).size() + p.test_rows(f).size() == 11);
  }
}

TEST_CASE("folds need k rows per class") {
  CHECK_THROWS_AS(stratified_kfold(data::Labels{0, 0, 0, 1, 1}, 3, 1), Error);
}

TEST_CASE("grid sizes") {
  CHECK(default_grid(ModelKind::kCart).size() == 42);
  CHECK(default_grid(ModelKind::kKnn).size() == 21);
  CHECK(default_grid(ModelKind::kSvm).size() == 20 + 3 * 20 * 10);
  CHECK(default_grid(ModelKind::kRf).size() == 25);
  for (const auto& s : default_grid(ModelKind::kSvm))
    if (s.text("kernel", "") == "linear") CHECK_FALSE(s.has("gamma"));
}

TEST_CASE("grid ties go to the lexicographically first spec") {
  const auto x = separable(40, 2);
  const GridResult r = grid_search(ModelKind::kCart, x, x.labels(), 5, 0);
  CHECK(r.best_score == 1.0);
  CHECK(r.best.text("criterion", "") == "entropy");
  CHECK(r.best.integer("max_depth", 0) == 1);
  CHECK(r.scores.size() == 42);
}

TEST_CASE("linear SVM reaches perfect CV accuracy on separable data") {
  const auto x = separable(40, 7);
  const GridResult r = grid_search(ModelKind::kSvm, x, x.labels(), 5, 0);
  CHECK(r.best_score == 1.0);
  bool linear_perfect = false;
  double worst = 1.0;
  for (const auto& [s, score] : r.scores) {
    if (s.text("kernel", "") == "linear" && score == 1.0) linear_perfect = true;
    worst = std::min(worst, score);
    CHECK(score <= r.best_score);
  }
  CHECK(linear_perfect);
  CHECK(worst < 1.0);
}

TEST_CASE("cross validation coverage") {
  const auto x = fixtures::blobs(100, 2, 1.5, 4);
  std::map<std::pair<int, std::size_t>, int> seen;
  bool leak = false;
  const CvResult r = cross_validate(spec(ModelKind::kCart, {{"max_depth", 3.0}}), x, x.labels(), 10,
                                    3, 9, [&](const FoldEvent& e) {
                                      for (auto row : e.predicted_rows) {
                                        ++seen[{e.repeat, row}];
                                        if (std::find(e.train_rows.begin(), e.train_rows.end(), row) !=
                                            e.train_rows.end())
                                          leak = true;
                                      }
                                    });
  CHECK_FALSE(leak);
  REQUIRE(r.oof.size() == 3);
  CHECK(r.fold_accuracy.size() == 30);
  CHECK(seen.size() == 300);
  for (const auto& [_, count] : seen) CHECK(count == 1);
  for (const auto& rep : r.oof) CHECK(rep.size() == 100);
}

TEST_CASE("single repeat mean lies within fold extremes") {
  const auto x = fixtures::blobs(60, 2, 1.0, 2);
  const CvResult r = cross_validate(spec(ModelKind::kKnn, {{"n_neighbors", 3.0}}), x, x.labels(), 5, 1, 2);
  const auto [lo, hi] = std::minmax_element(r.fold_accuracy.begin(), r.fold_accuracy.end());
  CHECK(r.mean_accuracy() >= *lo);
  CHECK(r.mean_accuracy() <= *hi);
}

TEST_CASE("random forest folds are perfect on separable data") {
  const auto x = separable(80, 5);
  const CvResult r =
      cross_validate(spec(ModelKind::kRf, {{"n_estimators", 10.0}}), x, x.labels(), 5, 1, 5);
  for (double a : r.fold_accuracy) CHECK(a == 1.0);
}
