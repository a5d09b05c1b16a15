#include "monitor/learn/svm.hpp"

#include <cmath>
#include <limits>

#include "monitor/error.hpp"

namespace monitor::learn {
namespace {

constexpr double kTau = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::span<const double> row(const Matrix& m, Eigen::Index r) {
  return {m.data() + r * m.cols(), static_cast<std::size_t>(m.cols())};
}

}  // namespace

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::kLinear: return "linear";
    case Kernel::kPoly: return "poly";
    case Kernel::kRbf: return "rbf";
    case Kernel::kSigmoid: return "sigmoid";
  }
  return "?";
}

Kernel parse_kernel(std::string_view text) {
  for (Kernel k : {Kernel::kLinear, Kernel::kPoly, Kernel::kRbf, Kernel::kSigmoid})
    if (text == to_string(k)) return k;
  fail(ErrorKind::kInvalidArgument, "unknown kernel '" + std::string(text) + "'");
}

double KernelParams::operator()(std::span<const double> a, std::span<const double> b) const {
  switch (kernel) {
    case Kernel::kLinear: return dot(a, b);
    case Kernel::kPoly: return std::pow(gamma * dot(a, b) + coef0, degree);
    case Kernel::kRbf: {
      double s = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
      return std::exp(-gamma * s);
    }
    case Kernel::kSigmoid: return std::tanh(gamma * dot(a, b) + coef0);
  }
  return 0.0;
}

double SvmModel::decision(std::span<const double> x) const {
  require(static_cast<Eigen::Index>(x.size()) == support.cols() || support.rows() == 0,
          ErrorKind::kFeatureMismatch, "svm: input width differs from training width");
  double f = bias;
  for (Eigen::Index i = 0; i < support.rows(); ++i)
    f += dual_coef[static_cast<std::size_t>(i)] * kernel(row(support, i), x);
  return f;
}

double SvmModel::predict_positive(std::span<const double> x) const {
  const double z = platt_a * decision(x) + platt_b;
  // 1 / (1 + exp(z)) evaluated on the stable side.
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

SvmModel fit_svm(const Matrix& x, const std::vector<int>& labels, double c,
                 const KernelParams& kp, double tolerance) {
  require(c > 0.0, ErrorKind::kInvalidArgument, "svm: C must be positive");
  const Eigen::Index n = x.rows();
  require(n == static_cast<Eigen::Index>(labels.size()) && n > 0, ErrorKind::kInvalidArgument,
          "svm: bad training shape");

  std::vector<double> y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[i] == 1 ? 1.0 : -1.0;
  Eigen::MatrixXd q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) q(i, j) = q(j, i) = y[i] * y[j] * kp(row(x, i), row(x, j));

  std::vector<double> alpha(n, 0.0), grad(n, -1.0);
  const long max_iter = std::max<long>(10'000'000, 100L * n);
  for (long iter = 0; iter < max_iter; ++iter) {
    // Working set i: maximal violation among indices free to move up.
    double gmax = -std::numeric_limits<double>::infinity();
    Eigen::Index i = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (y[t] > 0 ? alpha[t] < c : alpha[t] > 0.0) {
        if (-y[t] * grad[t] >= gmax) {
          gmax = -y[t] * grad[t];
          i = t;
        }
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index j = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (y[t] > 0 ? alpha[t] > 0.0 : alpha[t] < c) {
        const double yg = y[t] * grad[t];
        gmax2 = std::max(gmax2, yg);
        if (i < 0) continue;
        const double diff = gmax + yg;
        if (diff > 0.0) {
          double quad = q(i, i) + q(t, t) - 2.0 * y[i] * y[t] * q(i, t);
          if (quad <= 0.0) quad = kTau;
          const double obj = -(diff * diff) / quad;
          if (obj <= best) {
            best = obj;
            j = t;
          }
        }
      }
    }
    if (i < 0 || j < 0 || gmax + gmax2 < tolerance) break;

    const double ai = alpha[i], aj = alpha[j];
    if (y[i] != y[j]) {
      double quad = q(i, i) + q(j, j) + 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > 0.0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else if (alpha[j] > c) {
        alpha[j] = c;
        alpha[i] = c + diff;
      }
    } else {
      double quad = q(i, i) + q(j, j) - 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else if (alpha[j] < 0.0) {
        alpha[j] = 0.0;
        alpha[i] = sum;
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = sum;
      }
    }
    const double di = alpha[i] - ai, dj = alpha[j] - aj;
    for (Eigen::Index t = 0; t < n; ++t) grad[t] += q(i, t) * di + q(j, t) * dj;
  }

  // Bias from free vectors, or the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity(), lb = -ub, free_sum = 0.0;
  int free_count = 0;
  for (Eigen::Index t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (alpha[t] >= c) {
      if (y[t] < 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (alpha[t] <= 0.0) {
      if (y[t] > 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++free_count;
      free_sum += yg;
    }
  }
  const double rho = free_count > 0 ? free_sum / free_count : (ub + lb) / 2.0;

  SvmModel m;
  m.kernel = kp;
  m.bias = -rho;
  std::vector<Eigen::Index> sv;
  for (Eigen::Index t = 0; t < n; ++t)
    if (alpha[t] > 0.0) sv.push_back(t);
  m.support.resize(static_cast<Eigen::Index>(sv.size()), x.cols());
  for (std::size_t k = 0; k < sv.size(); ++k) {
    m.support.row(static_cast<Eigen::Index>(k)) = x.row(sv[k]);
    m.dual_coef.push_back(alpha[sv[k]] * y[sv[k]]);
  }

  std::vector<double> dec(n);
  for (Eigen::Index t = 0; t < n; ++t) dec[t] = m.decision(row(x, t));
  std::tie(m.platt_a, m.platt_b) = fit_platt(dec, labels);
  return m;
}

std::pair<double, double> fit_platt(std::span<const double> dec, const std::vector<int>& y) {
  require(dec.size() == y.size() && !y.empty(), ErrorKind::kInvalidArgument,
          "platt: decision values and labels differ in length");
  double prior1 = 0.0, prior0 = 0.0;
  for (int l : y) (l == 1 ? prior1 : prior0) += 1.0;
  const double hi = (prior1 + 1.0) / (prior1 + 2.0), lo = 1.0 / (prior0 + 2.0);
  const std::size_t n = y.size();
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = y[i] == 1 ? hi : lo;

  auto value = [&](double a, double b) {
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double z = dec[i] * a + b;
      f += z >= 0.0 ? t[i] * z + std::log1p(std::exp(-z)) : (t[i] - 1.0) * z + std::log1p(std::exp(z));
    }
    return f;
  };

  double a = 0.0, b = std::log((prior0 + 1.0) / (prior1 + 1.0));
  double f = value(a, b);
  constexpr double kSigma = 1e-12, kEps = 1e-5, kMinStep = 1e-10;
  for (int iter = 0; iter < 100; ++iter) {
    double h11 = kSigma, h22 = kSigma, h21 = 0.0, g1 = 0.0, g2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double z = dec[i] * a + b;
      double p, q;
      if (z >= 0.0) {
        p = std::exp(-z) / (1.0 + std::exp(-z));
        q = 1.0 / (1.0 + std::exp(-z));
      } else {
        p = 1.0 / (1.0 + std::exp(z));
        q = std::exp(z) / (1.0 + std::exp(z));
      }
      const double d2 = p * q;
      h11 += dec[i] * dec[i] * d2;
      h22 += d2;
      h21 += dec[i] * d2;
      const double d1 = t[i] - p;
      g1 += dec[i] * d1;
      g2 += d1;
    }
    if (std::abs(g1) < kEps && std::abs(g2) < kEps) break;
    const double det = h11 * h22 - h21 * h21;
    const double da = -(h22 * g1 - h21 * g2) / det;
    const double db = -(-h21 * g1 + h11 * g2) / det;
    const double gd = g1 * da + g2 * db;
    double step = 1.0;
    while (step >= kMinStep) {
      const double na = a + step * da, nb = b + step * db;
      const double nf = value(na, nb);
      if (nf < f + 1e-4 * step * gd) {
        a = na;
        b = nb;
        f = nf;
        break;
      }
      step /= 2.0;
    }
    if (step < kMinStep) break;
  }
  return {a, b};
}

}  // namespace monitor::learn
