#include "monitor/learn/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "monitor/error.hpp"
#include "monitor/rng.hpp"

namespace monitor::learn {
namespace {

double impurity(Criterion c, double pos, double n) {
  if (n <= 0.0) return 0.0;
  const double p = pos / n, q = 1.0 - p;
  if (c == Criterion::kGini) return 1.0 - p * p - q * q;
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double child_impurity = 0.0;  // size-weighted sum over both children
};

class Builder {
 public:
  Builder(const Matrix& x, const std::vector<int>& y, const TreeOptions& o)
      : x_(x), y_(y), o_(o), rng_(o.seed), importance_(x.cols(), 0.0) {}

  DecisionTree run(std::vector<std::size_t> rows) {
    build(rows, 0);
    DecisionTree t;
    t.nodes = std::move(nodes_);
    const double total = std::accumulate(importance_.begin(), importance_.end(), 0.0);
    if (total > 0.0)
      for (double& v : importance_) v /= total;
    t.importance = std::move(importance_);
    return t;
  }

 private:
  int build(std::vector<std::size_t>& rows, int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    double pos = 0.0;
    for (std::size_t r : rows) pos += y_[r];
    const double n = static_cast<double>(rows.size());
    nodes_[id].positive = pos / n;
    nodes_[id].samples = static_cast<int>(rows.size());

    const bool pure = pos == 0.0 || pos == n;
    const bool depth_left = o_.max_depth == 0 || depth < o_.max_depth;
    if (pure || !depth_left || rows.size() < 2) return id;
    const std::optional<Split> split = best_split(rows, pos);
    if (!split) return id;

    std::vector<std::size_t> left, right;
    for (std::size_t r : rows)
      (x_(static_cast<Eigen::Index>(r), split->feature) <= split->threshold ? left : right)
          .push_back(r);
    importance_[split->feature] += n * impurity(o_.criterion, pos, n) - split->child_impurity;
    std::vector<std::size_t>().swap(rows);

    nodes_[id].feature = split->feature;
    nodes_[id].threshold = split->threshold;
    const int l = build(left, depth + 1);
    nodes_[id].left = l;
    const int r = build(right, depth + 1);
    nodes_[id].right = r;
    return id;
  }

  std::optional<Split> best_split(const std::vector<std::size_t>& rows, double total_pos) {
    const int d = static_cast<int>(x_.cols());
    std::vector<int> features(d);
    std::iota(features.begin(), features.end(), 0);
    const bool subsample = o_.max_features > 0 && o_.max_features < d;
    if (subsample) rng_.shuffle(std::span<int>(features));

    std::optional<Split> best;
    std::vector<std::pair<double, int>> column(rows.size());
    int visited = 0;
    for (int f : features) {
      if (subsample && visited >= o_.max_features) break;
      for (std::size_t i = 0; i < rows.size(); ++i)
        column[i] = {x_(static_cast<Eigen::Index>(rows[i]), f), y_[rows[i]]};
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;  // constant here
      ++visited;

      const double n = static_cast<double>(rows.size());
      double left_pos = 0.0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        left_pos += column[i].second;
        if (column[i].first == column[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1), nr = n - nl;
        const double child = nl * impurity(o_.criterion, left_pos, nl) +
                             nr * impurity(o_.criterion, total_pos - left_pos, nr);
        if (!best || child < best->child_impurity) {
          const double a = column[i].first, b = column[i + 1].first;
          double t = a + (b - a) / 2.0;
          if (!(t < b)) t = a;
          best = Split{f, t, child};
        }
      }
    }
    return best;
  }

  const Matrix& x_;
  const std::vector<int>& y_;
  TreeOptions o_;
  Rng rng_;
  std::vector<TreeNode> nodes_;
  std::vector<double> importance_;
};

}  // namespace

double DecisionTree::predict_positive(std::span<const double> x) const {
  require(!nodes.empty(), ErrorKind::kState, "tree has no nodes");
  int i = 0;
  while (nodes[i].feature >= 0)
    i = x[nodes[i].feature] <= nodes[i].threshold ? nodes[i].left : nodes[i].right;
  return nodes[i].positive;
}

int DecisionTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<int> level(nodes.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    deepest = std::max(deepest, level[i]);
    if (nodes[i].feature >= 0) {
      level[nodes[i].left] = level[i] + 1;
      level[nodes[i].right] = level[i] + 1;
    }
  }
  return deepest;
}

DecisionTree fit_tree(const Matrix& x, const std::vector<int>& y, const TreeOptions& options,
                      std::span<const std::size_t> rows) {
  require(x.rows() == static_cast<Eigen::Index>(y.size()), ErrorKind::kInvalidArgument,
          "tree: row count differs from label count");
  require(x.rows() > 0, ErrorKind::kInvalidArgument, "tree: no training rows");
  std::vector<std::size_t> r(rows.begin(), rows.end());
  if (r.empty()) {
    r.resize(y.size());
    std::iota(r.begin(), r.end(), 0);
  }
  return Builder(x, y, options).run(std::move(r));
}

double RandomForest::predict_positive(std::span<const double> x) const {
  require(!trees.empty(), ErrorKind::kState, "forest has no trees");
  double sum = 0.0;
  for (const auto& t : trees) sum += t.predict_positive(x);
  return sum / static_cast<double>(trees.size());
}

RandomForest fit_forest(const Matrix& x, const std::vector<int>& y, const ForestOptions& o) {
  require(o.n_estimators >= 1, ErrorKind::kInvalidArgument, "forest needs at least one tree");
  const std::size_t n = y.size();
  const int d = static_cast<int>(x.cols());
  TreeOptions to;
  to.max_depth = o.max_depth;
  to.criterion = o.criterion;
  to.max_features = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)))));

  RandomForest f;
  f.importance.assign(d, 0.0);
  std::vector<std::size_t> rows(n);
  for (int t = 0; t < o.n_estimators; ++t) {
    const std::uint64_t stream = Rng::derive(o.seed, static_cast<std::uint64_t>(t));
    Rng rng(stream);
    for (auto& r : rows) r = rng.below(n);
    to.seed = Rng::derive(stream, 1);
    f.trees.push_back(fit_tree(x, y, to, rows));
    for (int c = 0; c < d; ++c) f.importance[c] += f.trees.back().importance[c];
  }
  const double total = std::accumulate(f.importance.begin(), f.importance.end(), 0.0);
  if (total > 0.0)
    for (double& v : f.importance) v /= total;
  return f;
}

}  // namespace monitor::learn
