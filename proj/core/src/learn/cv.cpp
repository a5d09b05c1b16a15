#include "monitor/learn/cv.hpp"

#include <numeric>

#include "monitor/error.hpp"
#include "monitor/learn/model.hpp"
#include "monitor/rng.hpp"

namespace monitor::learn {

std::vector<std::size_t> FoldPlan::train_rows(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i)
    if (fold_of[i] != fold) out.push_back(i);
  return out;
}

std::vector<std::size_t> FoldPlan::test_rows(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i)
    if (fold_of[i] == fold) out.push_back(i);
  return out;
}

FoldPlan stratified_kfold(const data::Labels& y, int k, std::uint64_t seed) {
  require(k >= 2, ErrorKind::kInvalidArgument, "k-fold needs k >= 2");
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < y.size(); ++i) {
    require(y[i] == 0 || y[i] == 1, ErrorKind::kInvalidArgument, "labels must be 0 or 1");
    by_class[y[i]].push_back(i);
  }
  require(!by_class[0].empty() && !by_class[1].empty(), ErrorKind::kSingleClass,
          "stratified folds need both classes");
  for (const auto& c : by_class)
    require(c.size() >= static_cast<std::size_t>(k), ErrorKind::kInvalidArgument,
            "a class has " + std::to_string(c.size()) + " rows, fewer than k = " +
                std::to_string(k));

  Rng rng(seed);
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.fold_of.assign(y.size(), -1);
  std::size_t position = 0;
  for (auto& c : by_class) {
    rng.shuffle(std::span<std::size_t>(c));
    for (std::size_t row : c) plan.fold_of[row] = static_cast<int>(position++ % k);
  }
  return plan;
}

double CvResult::mean_accuracy() const {
  if (fold_accuracy.empty()) return 0.0;
  return std::accumulate(fold_accuracy.begin(), fold_accuracy.end(), 0.0) /
         static_cast<double>(fold_accuracy.size());
}

std::vector<double> CvResult::mean_oof() const {
  require(!oof.empty(), ErrorKind::kState, "no out-of-fold predictions");
  std::vector<double> out(oof.front().size(), 0.0);
  for (const auto& rep : oof)
    for (std::size_t i = 0; i < rep.size(); ++i) out[i] += rep[i];
  for (double& v : out) v /= static_cast<double>(oof.size());
  return out;
}

namespace {

void run_plan(const ClassifierSpec& spec, const data::FeatureMatrix& x, const data::Labels& y,
              const FoldPlan& plan, int repeat, CvResult& out, const FoldObserver& observer) {
  require(plan.fold_of.size() == x.rows() && y.size() == x.rows(), ErrorKind::kInvalidArgument,
          "fold plan, labels and matrix differ in row count");
  std::vector<double> oof(x.rows(), 0.0);
  for (int f = 0; f < plan.k; ++f) {
    const auto train = plan.train_rows(f);
    const auto test = plan.test_rows(f);
    data::Labels ytrain;
    for (std::size_t r : train) ytrain.push_back(y[r]);
    const TrainedModel m = fit(spec, x.select_rows(train), ytrain);
    const std::vector<double> p = predict_positive(m, x.select_rows(test));
    int correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      oof[test[i]] = p[i];
      correct += (p[i] >= 0.5 ? 1 : 0) == y[test[i]];
    }
    out.fold_accuracy.push_back(test.empty() ? 0.0
                                             : static_cast<double>(correct) /
                                                   static_cast<double>(test.size()));
    if (observer) observer(FoldEvent{repeat, f, train, test});
  }
  out.oof.push_back(std::move(oof));
  out.plans.push_back(plan);
}

}  // namespace

CvResult cross_validate(const ClassifierSpec& spec, const data::FeatureMatrix& x,
                        const data::Labels& y, int k, int repeats, std::uint64_t seed,
                        const FoldObserver& observer) {
  require(repeats >= 1, ErrorKind::kInvalidArgument, "repeats must be >= 1");
  CvResult out;
  for (int r = 0; r < repeats; ++r) {
    const FoldPlan plan = stratified_kfold(y, k, Rng::derive(seed, static_cast<std::uint64_t>(r)));
    run_plan(spec, x, y, plan, r, out, observer);
  }
  return out;
}

CvResult cross_validate(const ClassifierSpec& spec, const data::FeatureMatrix& x,
                        const data::Labels& y, const FoldPlan& plan,
                        const FoldObserver& observer) {
  CvResult out;
  run_plan(spec, x, y, plan, 0, out, observer);
  return out;
}

}  // namespace monitor::learn
