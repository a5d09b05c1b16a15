#pragma once

#include <cstddef>
#include <span>

namespace monitor::vision {

/// Symmetric generalized Gaussian: shape alpha and variance.
struct GgdParams {
  double alpha = 0.0;
  double variance = 0.0;
};

/// Asymmetric generalized Gaussian fitted by moment matching.
struct AggdParams {
  double alpha = 0.0;
  double sigma_l = 0.0;
  double sigma_r = 0.0;
  double mean_offset = 0.0;
};

/// Shape lookup grid: alpha in [0.2, 10] with step 0.001.
inline constexpr double kAlphaMin = 0.2;
inline constexpr double kAlphaMax = 10.0;
inline constexpr double kAlphaStep = 0.001;

/// r(alpha) = Gamma(2/alpha)^2 / (Gamma(1/alpha) Gamma(3/alpha)).
double shape_ratio(double alpha);
/// Grid alpha whose shape_ratio is closest to `ratio`.
double invert_shape_ratio(double ratio);

/// Throws kDegenerate when all samples are zero.
GgdParams fit_ggd(std::span<const double> samples);

/// Throws kDegenerate ("degenerate AGGD input") when the samples lack either
/// sign, and kInvalidArgument when fewer than `min_samples` are given.
AggdParams fit_aggd(std::span<const double> samples, std::size_t min_samples = 100);

}  // namespace monitor::vision
