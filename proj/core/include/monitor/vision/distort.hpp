#pragma once

#include <cstdint>

#include "monitor/vision/image.hpp"

namespace monitor::vision {

/// Synthetic distortions used for calibration and for checking that the
/// quality scores respond to degradation. Results are clamped to [0, 255].
GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);
GrayImage gaussian_blur(const GrayImage& img, double sigma);
/// ksize odd; operates on the 8-bit rounded image.
GrayImage median_blur(const GrayImage& img, int ksize);
/// Encodes to JPEG at `quality` (1-100) and decodes again.
GrayImage jpeg_recompress(const GrayImage& img, int quality);

}  // namespace monitor::vision
