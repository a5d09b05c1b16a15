#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "monitor/ensemble/ensemble.hpp"
#include "monitor/ensemble/voting.hpp"
#include "monitor/error.hpp"
#include "monitor/learn/model.hpp"

using namespace monitor;
using namespace monitor::ensemble;
using learn::ClassifierSpec;
using learn::ModelKind;

namespace {

Eigen::MatrixXd probs(std::initializer_list<std::pair<double, double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), 2);
  Eigen::Index r = 0;
  for (auto [real, fake] : rows) {
    m(r, 0) = real;
    m(r, 1) = fake;
    ++r;
  }
  return m;
}

std::vector<ClassifierSpec> base_specs() {
  return {{ModelKind::kCart, {{"max_depth", 4.0}}, 1},
          {ModelKind::kKnn, {{"n_neighbors", 7.0}}, 1},
          {ModelKind::kSvm, {{"C", 1.0}, {"kernel", std::string("linear")}}, 1},
          {ModelKind::kRf, {{"n_estimators", 10.0}, {"max_depth", 5.0}}, 1}};
}

double accuracy(const data::Labels& a, const data::Labels& b) {
  double ok = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ok += a[i] == b[i] ? 1 : 0;
  return ok / static_cast<double>(a.size());
}

}  // namespace

TEST_CASE("soft vote sums class probabilities") {
  const Prediction p = soft_vote({probs({{0.6, 0.4}}), probs({{0.2, 0.8}}), probs({{0.45, 0.55}})});
  CHECK(p.labels[0] == 1);
  CHECK(p.positive[0] == doctest::Approx(1.75 / 3.0));
  CHECK(soft_vote({probs({{1, 0}}), probs({{1, 0}})}).labels[0] == 0);
  const Prediction one = soft_vote({probs({{0.3, 0.7}, {0.8, 0.2}, {0.5, 0.5}})});
  CHECK(one.labels == data::Labels{1, 0, 1});
  CHECK_THROWS_AS(soft_vote({probs({{0.5, 0.5}}), probs({{0.5, 0.5}, {0.1, 0.9}})}), Error);
}

TEST_CASE("vote weights are normalized accuracies") {
  const auto w = vote_weights(std::vector<double>{0.9, 0.6, 0.75, 0.75});
  CHECK(w[0] == doctest::Approx(0.3));
  CHECK(w[1] == doctest::Approx(0.2));
  CHECK(w[2] == doctest::Approx(0.25));
  CHECK(w[3] == doctest::Approx(0.25));
  const auto u = vote_weights(std::vector<double>{0.7, 0.7});
  CHECK(u[0] == 0.5);
  CHECK(vote_weights(std::vector<double>{0.0, 0.4})[0] == 0.0);
  CHECK_THROWS_AS(vote_weights(std::vector<double>{0.0, 0.0}), Error);
}

TEST_CASE("weighted vote") {
  const std::vector<Eigen::MatrixXd> two{probs({{0.4, 0.6}}), probs({{0.9, 0.1}})};
  const Prediction p = weighted_vote(two, std::vector<double>{0.7, 0.3});
  CHECK(p.positive[0] == doctest::Approx(0.45));
  CHECK(p.labels[0] == 0);

  const std::vector<Eigen::MatrixXd> four{probs({{0.3, 0.7}, {0.6, 0.4}}), probs({{0.9, 0.1}, {0.1, 0.9}}),
                                          probs({{0.8, 0.2}, {0.2, 0.8}}), probs({{0.5, 0.5}, {0.7, 0.3}})};
  CHECK(weighted_vote(four, std::vector<double>{1, 0, 0, 0}).labels == data::Labels{1, 0});
  CHECK(weighted_vote(four, std::vector<double>(4, 0.25)).labels == soft_vote(four).labels);
  CHECK_THROWS_AS(weighted_vote(four, std::vector<double>{1.0}), Error);
}

TEST_CASE("compute_vote_weights uses training accuracy") {
  const auto x = fixtures::blobs(80, 2, 2.0, 3);
  std::vector<learn::TrainedModel> base;
  for (const auto& s : base_specs()) base.push_back(learn::fit(s, x));
  const auto w = compute_vote_weights(base, x, x.labels());
  std::vector<double> acc;
  double sum = 0;
  for (const auto& b : base) {
    acc.push_back(accuracy(learn::predict_labels(b, x), x.labels()));
    sum += acc.back();
  }
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(w[i] == doctest::Approx(acc[i] / sum));
  const auto e = fit_weighted_vote(base_specs(), x, x.labels());
  CHECK(e.weights == w);
}

TEST_CASE("stacking protocol: coverage, no leakage, meta width") {
  const auto x = fixtures::blobs(100, 3, 1.5, 11);
  Protocol p;
  p.seed = 4;
  ProtocolTrace trace;
  const EnsembleModel e = fit_stacking(base_specs(), x, x.labels(), p, &trace);
  CHECK(trace.fits.size() == 4 * 10 * 3);
  std::map<std::pair<int, std::size_t>, int> per_model_row;
  for (const auto& f : trace.fits) {
    const std::set<std::size_t> train(f.train.begin(), f.train.end());
    for (auto r : f.predicted) {
      CHECK(train.count(r) == 0);
      ++per_model_row[{f.model, r}];
    }
  }
  CHECK(per_model_row.size() == 400);
  for (const auto& [_, c] : per_model_row) CHECK(c == 3);
  CHECK(trace.meta_features.rows() == 100);
  CHECK(trace.meta_features.cols() == 3 + 4);
  REQUIRE(e.meta.has_value());
  CHECK(e.base.size() == 4);
  CHECK(e.meta_cv_accuracy.size() == 5);
}

TEST_CASE("stacking fits separable data perfectly") {
  const auto x = fixtures::blobs(100, 2, 8.0, 1);
  Protocol p;
  const EnsembleModel e = fit_stacking(base_specs(), x, x.labels(), p);
  CHECK(accuracy(ensemble_predict(e, x).labels, x.labels()) == 1.0);
  std::vector<std::size_t> real_rows;
  for (std::size_t r = 0; r < x.rows(); ++r)
    if (x.labels()[r] == 0 && x.at(r, 0) < -4.0 && x.at(r, 1) < -4.0) real_rows.push_back(r);
  REQUIRE_FALSE(real_rows.empty());
  const auto clear = x.select_rows(real_rows);
  // Tree and neighbour models give exactly 0 here; Platt-scaled SVM output
  // can only approach it.
  for (const auto& b : e.base)
    for (double v : learn::predict_positive(b, clear)) {
      if (b.spec.kind == ModelKind::kSvm) CHECK(v < 0.05);
      else CHECK(v == 0.0);
    }
  for (double v : ensemble_predict(e, clear).positive) CHECK(1.0 - v >= 0.5);
}

TEST_CASE("blending splits 1000 rows 500 / 335 / 165") {
  const auto x = fixtures::blobs(1000, 2, 1.5, 5);
  Protocol p;
  p.seed = 9;
  ProtocolTrace t1, t2;
  const EnsembleModel a = fit_blending(base_specs(), x, x.labels(), p, &t1);
  const EnsembleModel b = fit_blending(base_specs(), x, x.labels(), p, &t2);
  CHECK(t1.test_rows.size() == 500);
  CHECK(t1.train_rows.size() == 335);
  CHECK(t1.val_rows.size() == 165);
  std::set<std::size_t> all(t1.test_rows.begin(), t1.test_rows.end());
  all.insert(t1.train_rows.begin(), t1.train_rows.end());
  all.insert(t1.val_rows.begin(), t1.val_rows.end());
  CHECK(all.size() == 1000);
  CHECK(t1.meta_features.rows() == 165);
  CHECK(t1.meta_features.cols() == 4);
  REQUIRE(a.meta.has_value());
  CHECK(std::get<learn::LogisticModel>(a.meta->estimator) ==
        std::get<learn::LogisticModel>(b.meta->estimator));
}

TEST_CASE("super learner builds an n x 4 out-of-fold matrix on a shared split") {
  const auto x = fixtures::blobs(100, 2, 1.5, 6);
  Protocol p;
  ProtocolTrace t;
  fit_super_learner(base_specs(), x, x.labels(), p, &t);
  CHECK(t.meta_features.rows() == 100);
  CHECK(t.meta_features.cols() == 4);
  std::map<int, std::vector<int>> seen;
  std::map<int, std::vector<std::vector<std::size_t>>> folds;
  for (const auto& f : t.fits) {
    auto& s = seen[f.model];
    s.resize(100);
    for (auto r : f.predicted) ++s[r];
    folds[f.model].push_back(f.predicted);
  }
  CHECK(seen.size() == 4);
  for (const auto& [_, s] : seen)
    for (int c : s) CHECK(c == 1);
  for (int m = 1; m < 4; ++m) CHECK(folds[m] == folds[0]);
}

TEST_CASE("super learner over identical base models") {
  const auto x = fixtures::blobs(200, 2, 1.0, 7);
  const ClassifierSpec knn{ModelKind::kKnn, {{"n_neighbors", 9.0}}, 1};
  Protocol p;
  ProtocolTrace t;
  const EnsembleModel e = fit_super_learner({knn, knn, knn, knn}, x, x.labels(), p, &t);
  for (int c = 1; c < 4; ++c) CHECK(t.meta_features.col(c) == t.meta_features.col(0));
  double oof_correct = 0;
  for (Eigen::Index r = 0; r < t.meta_features.rows(); ++r)
    oof_correct += ((t.meta_features(r, 0) >= 0.5) == (x.labels()[static_cast<std::size_t>(r)] == 1));
  const double oof_acc = oof_correct / 200.0;
  // The meta model sees four copies of the same out-of-fold column, so its
  // in-sample accuracy should match that column's accuracy up to one row.
  std::vector<std::string> names;
  for (int c = 0; c < 4; ++c) names.push_back(e.meta->feature_names[static_cast<std::size_t>(c)]);
  std::vector<std::vector<double>> rows;
  for (Eigen::Index r = 0; r < t.meta_features.rows(); ++r)
    rows.push_back({t.meta_features(r, 0), t.meta_features(r, 1), t.meta_features(r, 2),
                    t.meta_features(r, 3)});
  const auto meta_x = fixtures::matrix(names, rows, x.labels());
  const double meta_acc = accuracy(learn::predict_labels(*e.meta, meta_x), x.labels());
  CHECK(std::abs(meta_acc - oof_acc) <= 1.0 / 200.0 + 1e-12);
}

TEST_CASE("dispatch, determinism and persistence") {
  const auto x = fixtures::blobs(120, 2, 1.5, 8);
  const auto test = fixtures::blobs(40, 2, 1.5, 9);
  Protocol p;
  p.k = 5;
  p.repeats = 2;
  const auto dir = fixtures::scratch("ensemble_io");
  for (EnsembleKind kind : all_ensemble_kinds()) {
    CAPTURE(to_string(kind));
    const EnsembleModel e = fit_ensemble(kind, base_specs(), x, x.labels(), p);
    const Prediction a = ensemble_predict(e, test);
    CHECK(a.positive == ensemble_predict(e, test).positive);
    if (kind == EnsembleKind::kSoftVote) CHECK(a.positive == soft_vote(e.base, test).positive);
    const auto sub = dir / to_string(kind);
    save_ensemble(e, sub);
    const EnsembleModel back = load_ensemble(sub / "manifest.json");
    CHECK(back.base.size() == 4);
    CHECK(back.meta.has_value() == e.meta.has_value());
    CHECK(ensemble_predict(back, test).positive == a.positive);
    for (double v : a.positive) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}
