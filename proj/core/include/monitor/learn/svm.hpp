#pragma once

#include <span>
#include <vector>

#include "monitor/learn/matrix.hpp"

namespace monitor::learn {

enum class Kernel { kLinear, kPoly, kRbf, kSigmoid };

const char* to_string(Kernel k);
Kernel parse_kernel(std::string_view text);

/// linear: <a,b>; poly: (gamma<a,b> + coef0)^degree; rbf: exp(-gamma|a-b|^2);
/// sigmoid: tanh(gamma<a,b> + coef0). gamma is unused by the linear kernel.
struct KernelParams {
  Kernel kernel = Kernel::kRbf;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 0.0;

  double operator()(std::span<const double> a, std::span<const double> b) const;

  friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

/// Soft-margin C-SVC. The decision value is sum(dual_coef * K(sv, x)) + bias
/// with fake as the positive side; probabilities come from a sigmoid
/// 1 / (1 + exp(platt_a * f + platt_b)) fitted on the training decision values.
struct SvmModel {
  KernelParams kernel;
  Matrix support;
  std::vector<double> dual_coef;  // alpha_i * y_i, y in {-1, +1}
  double bias = 0.0;
  double platt_a = 0.0;
  double platt_b = 0.0;

  double decision(std::span<const double> x) const;
  double predict_positive(std::span<const double> x) const;

  friend bool operator==(const SvmModel& a, const SvmModel& b) {
    return a.kernel == b.kernel && a.support.rows() == b.support.rows() &&
           a.support.cols() == b.support.cols() && a.support == b.support &&
           a.dual_coef == b.dual_coef && a.bias == b.bias && a.platt_a == b.platt_a &&
           a.platt_b == b.platt_b;
  }
};

/// Sequential minimal optimization with second-order working-set selection,
/// stopping when the maximal KKT violation falls below `tolerance`.
SvmModel fit_svm(const Matrix& x, const std::vector<int>& y, double c, const KernelParams& kernel,
                 double tolerance = 1e-3);

/// Fits (A, B) of P(fake | f) = 1 / (1 + exp(A f + B)) by regularized maximum
/// likelihood with Newton steps and backtracking.
std::pair<double, double> fit_platt(std::span<const double> decision, const std::vector<int>& y);

}  // namespace monitor::learn
