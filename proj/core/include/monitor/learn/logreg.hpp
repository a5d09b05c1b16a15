#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "monitor/learn/matrix.hpp"

namespace monitor::learn {

/// L2-penalized logistic regression, objective 0.5*|w|^2 + C * sum(log loss).
/// The intercept is not penalized.
struct LogisticModel {
  Eigen::VectorXd coef;
  double intercept = 0.0;

  double predict_positive(std::span<const double> x) const;

  friend bool operator==(const LogisticModel& a, const LogisticModel& b) {
    return a.intercept == b.intercept && a.coef.size() == b.coef.size() && a.coef == b.coef;
  }
};

/// Newton iterations with a backtracking line search.
LogisticModel fit_logistic(const Matrix& x, const std::vector<int>& y, double c = 1.0);

double sigmoid(double z);

}  // namespace monitor::learn
