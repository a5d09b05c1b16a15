#pragma once

#include "monitor/vision/image.hpp"

namespace monitor::vision {

struct MscnOptions {
  int window = 7;
  double window_sigma = 7.0 / 6.0;
  double stabilizer = 1.0;  // C, on the [0, 255] scale
};

/// MSCN coefficients and the local deviation map they were normalised by.
struct MscnField {
  Plane coefficients;
  Plane local_sigma;
};

/// (I - mu) / (sigma + C) with Gaussian-weighted local mean and deviation.
/// Borders replicate the edge pixel, so a constant offset cancels exactly.
MscnField mscn_field(const Plane& image, const MscnOptions& options = {});
Plane mscn_transform(const GrayImage& img, const MscnOptions& options = {});

/// Separable Gaussian filter with replicated borders; weights sum to 1.
Plane gaussian_filter(const Plane& in, int window, double sigma);

/// 2x2 box average; odd trailing rows/columns are dropped.
Plane downsample_half(const Plane& in);

/// Pairwise products of neighbouring coefficients.
enum class Orientation { kHorizontal, kVertical, kMainDiagonal, kAntiDiagonal };
std::vector<double> pairwise_products(const Plane& mscn, Orientation o);

}  // namespace monitor::vision
