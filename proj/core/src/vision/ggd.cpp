#include "monitor/vision/ggd.hpp"

#include <cmath>
#include <vector>

#include "monitor/error.hpp"

namespace monitor::vision {
namespace {

const std::vector<double>& ratio_table() {
  static const std::vector<double> table = [] {
    const int n = static_cast<int>(std::lround((kAlphaMax - kAlphaMin) / kAlphaStep)) + 1;
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = shape_ratio(kAlphaMin + i * kAlphaStep);
    return t;
  }();
  return table;
}

}  // namespace

double shape_ratio(double alpha) {
  return std::exp(2.0 * std::lgamma(2.0 / alpha) - std::lgamma(1.0 / alpha) -
                  std::lgamma(3.0 / alpha));
}

double invert_shape_ratio(double ratio) {
  const auto& t = ratio_table();
  std::size_t best = 0;
  double best_err = std::abs(t[0] - ratio);
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double err = std::abs(t[i] - ratio);
    if (err < best_err) {
      best_err = err;
      best = i;
    }
  }
  return kAlphaMin + static_cast<double>(best) * kAlphaStep;
}

GgdParams fit_ggd(std::span<const double> samples) {
  require(!samples.empty(), ErrorKind::kInvalidArgument, "GGD fit needs samples");
  double sum_abs = 0.0, sum_sq = 0.0;
  for (double v : samples) {
    sum_abs += std::abs(v);
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples.size());
  require(sum_sq > 0.0, ErrorKind::kDegenerate, "degenerate GGD input");
  const double mean_abs = sum_abs / n;
  const double variance = sum_sq / n;
  return {invert_shape_ratio(mean_abs * mean_abs / variance), variance};
}

AggdParams fit_aggd(std::span<const double> samples, std::size_t min_samples) {
  require(samples.size() >= min_samples, ErrorKind::kInvalidArgument,
          "AGGD fit needs at least " + std::to_string(min_samples) + " samples");
  double left_sq = 0.0, right_sq = 0.0, sum_abs = 0.0, sum_sq = 0.0;
  std::size_t left_n = 0, right_n = 0;
  for (double v : samples) {
    if (v < 0) {
      left_sq += v * v;
      ++left_n;
    } else if (v > 0) {
      right_sq += v * v;
      ++right_n;
    }
    sum_abs += std::abs(v);
    sum_sq += v * v;
  }
  require(left_n > 0 && right_n > 0, ErrorKind::kDegenerate, "degenerate AGGD input");
  const double n = static_cast<double>(samples.size());
  const double sigma_l = std::sqrt(left_sq / static_cast<double>(left_n));
  const double sigma_r = std::sqrt(right_sq / static_cast<double>(right_n));
  const double gamma = sigma_l / sigma_r;
  const double mean_abs = sum_abs / n;
  const double r_hat = mean_abs * mean_abs / (sum_sq / n);
  const double r_norm = r_hat * (gamma * gamma * gamma + 1.0) * (gamma + 1.0) /
                        ((gamma * gamma + 1.0) * (gamma * gamma + 1.0));
  AggdParams p;
  p.alpha = invert_shape_ratio(r_norm);
  p.sigma_l = sigma_l;
  p.sigma_r = sigma_r;
  p.mean_offset = (sigma_r - sigma_l) * std::exp(std::lgamma(2.0 / p.alpha) -
                                                 0.5 * (std::lgamma(1.0 / p.alpha) +
                                                        std::lgamma(3.0 / p.alpha)));
  return p;
}

}  // namespace monitor::vision
