#pragma once

#include <cstdint>

#include "monitor/data/feature_matrix.hpp"

namespace monitor::data {

/// Two-modality benchmark: per modality, each class is one isotropic 2-D
/// Gaussian blob. Class means sit at +/- separation/2 along the first axis of
/// each modality, with unit variance, so neither modality separates the
/// classes alone but the two are conditionally independent evidence.
/// Columns: text_a, text_b (textual), image_a, image_b (visual). Balanced labels.
struct TwoModalityBlobs {
  std::size_t n = 2000;
  double separation = 1.6;
};

FeatureMatrix make_two_modality_blobs(const TwoModalityBlobs& params, std::uint64_t seed);

}  // namespace monitor::data
