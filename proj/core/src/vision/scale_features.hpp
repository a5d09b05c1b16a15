#pragma once

#include <array>
#include <cstddef>

#include "monitor/vision/image.hpp"

namespace monitor::vision::detail {

/// GGD of the coefficients plus AGGD of the four neighbour products.
using ScaleFeatures = std::array<double, 18>;
ScaleFeatures scale_features(const Plane& coefficients, std::size_t min_samples);

}  // namespace monitor::vision::detail
