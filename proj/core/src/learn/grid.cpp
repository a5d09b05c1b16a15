#include "monitor/learn/grid.hpp"

#include <algorithm>

#include "monitor/error.hpp"
#include "monitor/learn/cv.hpp"

namespace monitor::learn {
namespace {

// Grid steps built from integers so 0.1 * k prints and compares cleanly.
double tenths(int k) { return k / 10.0; }

ClassifierSpec make(ModelKind kind, Params p, std::uint64_t seed) {
  ClassifierSpec s;
  s.kind = kind;
  s.params = std::move(p);
  s.seed = seed;
  return s;
}

}  // namespace

std::vector<ClassifierSpec> default_grid(ModelKind kind, std::uint64_t seed) {
  std::vector<ClassifierSpec> out;
  switch (kind) {
    case ModelKind::kCart:
      for (const char* c : {"gini", "entropy"})
        for (int d = 1; d <= 21; ++d)
          out.push_back(make(kind, {{"criterion", std::string(c)}, {"max_depth", double(d)}}, seed));
      break;
    case ModelKind::kKnn:
      for (int k = 1; k <= 21; ++k) out.push_back(make(kind, {{"n_neighbors", double(k)}}, seed));
      break;
    case ModelKind::kSvm:
      for (int c = 1; c <= 20; ++c) {
        out.push_back(make(kind, {{"C", tenths(c)}, {"kernel", std::string("linear")}}, seed));
        for (const char* k : {"poly", "rbf", "sigmoid"})
          for (int g = 1; g <= 10; ++g)
            out.push_back(make(
                kind, {{"C", tenths(c)}, {"gamma", tenths(g)}, {"kernel", std::string(k)}}, seed));
      }
      break;
    case ModelKind::kRf:
      for (int n : {10, 50, 100, 200, 500})
        for (int d : {3, 5, 10, 15, 20})
          out.push_back(
              make(kind, {{"max_depth", double(d)}, {"n_estimators", double(n)}}, seed));
      break;
    case ModelKind::kLogreg:
      out.push_back(make(kind, {{"C", 1.0}}, seed));
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const ClassifierSpec& a, const ClassifierSpec& b) { return a.params < b.params; });
  return out;
}

GridResult grid_search(const std::vector<ClassifierSpec>& candidates, const data::FeatureMatrix& x,
                       const data::Labels& y, int folds, std::uint64_t seed) {
  require(!candidates.empty(), ErrorKind::kInvalidArgument, "grid is empty");
  const FoldPlan plan = stratified_kfold(y, folds, seed);
  GridResult r;
  bool have = false;
  for (const auto& spec : candidates) {
    const double score = cross_validate(spec, x, y, plan).mean_accuracy();
    r.scores.emplace_back(spec, score);
    if (!have || score > r.best_score ||
        (score == r.best_score && spec.params < r.best.params)) {
      r.best = spec;
      r.best_score = score;
      have = true;
    }
  }
  return r;
}

GridResult grid_search(ModelKind kind, const data::FeatureMatrix& x, const data::Labels& y,
                       int folds, std::uint64_t seed) {
  return grid_search(default_grid(kind, seed), x, y, folds, seed);
}

}  // namespace monitor::learn
