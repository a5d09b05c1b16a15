#include "monitor/fusion/scaler.hpp"

#include <algorithm>

#include "monitor/error.hpp"

namespace monitor::fusion {
namespace {

double scale(double v, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
}

void require_fitted(const Scaler& s, std::size_t cols) {
  require(s.fitted, ErrorKind::kState, "scaler applied before fit");
  require(s.lo.size() == cols, ErrorKind::kFeatureMismatch,
          "scaler fitted on " + std::to_string(s.lo.size()) + " columns, got " +
              std::to_string(cols));
}

}  // namespace

Scaler fit_scaler(const learn::Matrix& train) {
  require(train.rows() > 0, ErrorKind::kInvalidArgument, "cannot fit a scaler on zero rows");
  Scaler s;
  s.fitted = true;
  s.lo.resize(train.cols());
  s.hi.resize(train.cols());
  for (Eigen::Index c = 0; c < train.cols(); ++c) {
    s.lo[c] = train.col(c).minCoeff();
    s.hi[c] = train.col(c).maxCoeff();
  }
  return s;
}

Scaler fit_scaler(const data::FeatureMatrix& train) { return fit_scaler(learn::to_matrix(train)); }

learn::Matrix apply_scaler(const Scaler& s, const learn::Matrix& x) {
  require_fitted(s, static_cast<std::size_t>(x.cols()));
  learn::Matrix out(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c) out(r, c) = scale(x(r, c), s.lo[c], s.hi[c]);
  return out;
}

data::FeatureMatrix apply_scaler(const Scaler& s, const data::FeatureMatrix& x) {
  require_fitted(s, x.cols());
  std::vector<double> v(x.values().begin(), x.values().end());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      double& cell = v[r * x.cols() + c];
      cell = scale(cell, s.lo[c], s.hi[c]);
    }
  return x.with_values(std::move(v));
}

}  // namespace monitor::fusion
