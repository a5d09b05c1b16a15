#include "monitor/learn/knn.hpp"

#include <algorithm>

#include "monitor/error.hpp"

namespace monitor::learn {

double KnnModel::predict_positive(std::span<const double> query) const {
  require(static_cast<Eigen::Index>(query.size()) == x.cols(), ErrorKind::kFeatureMismatch,
          "knn: query width differs from training width");
  const std::size_t n = y.size();
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t c = 0; c < query.size(); ++c) {
      const double diff = x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) - query[c];
      s += diff * diff;
    }
    dist[i] = {s, i};
  }
  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk), dist.end());
  int votes = 0;
  for (std::size_t i = 0; i < kk; ++i) votes += y[dist[i].second];
  return static_cast<double>(votes) / static_cast<double>(kk);
}

KnnModel fit_knn(const Matrix& x, const std::vector<int>& y, int k) {
  require(k >= 1, ErrorKind::kInvalidArgument, "knn: k must be >= 1");
  require(x.rows() == static_cast<Eigen::Index>(y.size()) && !y.empty(),
          ErrorKind::kInvalidArgument, "knn: bad training shape");
  return KnnModel{k, x, y};
}

}  // namespace monitor::learn
