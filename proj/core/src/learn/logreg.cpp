#include "monitor/learn/logreg.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "monitor/error.hpp"

namespace monitor::learn {
namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double objective(const Matrix& x, const Eigen::VectorXd& yv, const Eigen::VectorXd& theta,
                 double c) {
  const Eigen::Index d = x.cols();
  const Eigen::VectorXd z = x * theta.head(d) + Eigen::VectorXd::Constant(x.rows(), theta[d]);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) loss += softplus(z[i]) - yv[i] * z[i];
  return 0.5 * theta.head(d).squaredNorm() + c * loss;
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double LogisticModel::predict_positive(std::span<const double> x) const {
  require(static_cast<Eigen::Index>(x.size()) == coef.size(), ErrorKind::kFeatureMismatch,
          "logreg: input width differs from coefficient count");
  double z = intercept;
  for (std::size_t i = 0; i < x.size(); ++i) z += coef[static_cast<Eigen::Index>(i)] * x[i];
  return sigmoid(z);
}

LogisticModel fit_logistic(const Matrix& x, const std::vector<int>& y, double c) {
  require(c > 0.0, ErrorKind::kInvalidArgument, "logreg: C must be positive");
  require(x.rows() == static_cast<Eigen::Index>(y.size()) && !y.empty(),
          ErrorKind::kInvalidArgument, "logreg: bad training shape");
  const Eigen::Index n = x.rows(), d = x.cols();
  Eigen::VectorXd yv(n);
  for (Eigen::Index i = 0; i < n; ++i) yv[i] = y[static_cast<std::size_t>(i)];

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
  double f = objective(x, yv, theta, c);
  for (int iter = 0; iter < 100; ++iter) {
    const Eigen::VectorXd z = x * theta.head(d) + Eigen::VectorXd::Constant(n, theta[d]);
    Eigen::VectorXd p(n), w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = sigmoid(z[i]);
      w[i] = p[i] * (1.0 - p[i]);
    }
    const Eigen::VectorXd r = p - yv;
    Eigen::VectorXd grad(d + 1);
    grad.head(d) = theta.head(d) + c * x.transpose() * r;
    grad[d] = c * r.sum();
    if (grad.lpNorm<Eigen::Infinity>() < 1e-10) break;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d + 1, d + 1);
    h.topLeftCorner(d, d) = c * x.transpose() * w.asDiagonal() * x;
    h.topLeftCorner(d, d).diagonal().array() += 1.0;
    const Eigen::VectorXd xw = c * x.transpose() * w;
    h.block(0, d, d, 1) = xw;
    h.block(d, 0, 1, d) = xw.transpose();
    h(d, d) = c * w.sum() + 1e-12;
    const Eigen::VectorXd step = h.ldlt().solve(grad);

    double t = 1.0;
    bool moved = false;
    while (t > 1e-12) {
      const Eigen::VectorXd cand = theta - t * step;
      const double fc = objective(x, yv, cand, c);
      if (fc <= f - 1e-4 * t * grad.dot(step)) {
        theta = cand;
        f = fc;
        moved = true;
        break;
      }
      t /= 2.0;
    }
    if (!moved || t * step.lpNorm<Eigen::Infinity>() < 1e-12) break;
  }
  LogisticModel m;
  m.coef = theta.head(d);
  m.intercept = theta[d];
  return m;
}

}  // namespace monitor::learn
