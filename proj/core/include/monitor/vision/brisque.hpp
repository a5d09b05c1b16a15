#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monitor/vision/iqa_model.hpp"

namespace monitor::vision {

inline constexpr int kBrisqueDim = 36;
using BrisqueVector = std::array<double, kBrisqueDim>;

/// Feature order, per scale (full, then half resolution):
///   0  ggd_alpha      1  ggd_variance           (MSCN coefficients)
///   then for the horizontal, vertical, main-diagonal and anti-diagonal
///   neighbour products: aggd_alpha, mean_offset, sigma_l^2, sigma_r^2.
std::vector<std::string> brisque_feature_names();

/// Features of an image whose statistics cannot be fitted (for instance a
/// constant image): every alpha entry is kAlphaMax and every other entry 0.
BrisqueVector brisque_fallback_vector();

BrisqueVector brisque_features(const GrayImage& img);

/// Uncalibrated Mahalanobis distance of the features from the pristine mean
/// under the model's shrunk covariance.
double brisque_distance(const BrisqueVector& features, const IqaModel& model);

/// calibration.map(distance), clamped to [1, 100]; lower is more natural.
double brisque_score(const GrayImage& img, const IqaModel& model);

struct BrisqueCalibrationOptions {
  double shrinkage = 0.5;
  double noise_sigma = 40.0;
  double blur_sigma = 3.0;
  std::uint64_t seed = 1;
};

/// Fits the pristine model on the corpus and calibrates the score scale
/// against noised and blurred copies of the same corpus.
IqaModel fit_brisque_model(std::span<const GrayImage> corpus,
                           const BrisqueCalibrationOptions& options = {});

}  // namespace monitor::vision
