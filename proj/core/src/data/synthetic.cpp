#include "monitor/data/synthetic.hpp"

#include <string>

#include "monitor/rng.hpp"

namespace monitor::data {

FeatureMatrix make_two_modality_blobs(const TwoModalityBlobs& params, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = params.n;
  std::vector<double> values;
  values.reserve(n * 4);
  std::vector<std::string> ids;
  ids.reserve(n);
  Labels labels;
  labels.reserve(n);
  const double half = params.separation / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int y = static_cast<int>(i % 2);
    const double sign = y == 1 ? 1.0 : -1.0;
    values.push_back(sign * half + rng.normal());
    values.push_back(rng.normal());
    values.push_back(sign * half + rng.normal());
    values.push_back(rng.normal());
    ids.push_back("s" + std::to_string(i));
    labels.push_back(y);
  }
  return FeatureMatrix({"text_a", "text_b", "image_a", "image_b"},
                       {Modality::kTextual, Modality::kTextual, Modality::kVisual,
                        Modality::kVisual},
                       std::move(ids), std::move(values), std::move(labels));
}

}  // namespace monitor::data
