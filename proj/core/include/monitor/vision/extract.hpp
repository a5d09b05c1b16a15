#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/vision/event_stats.hpp"
#include "monitor/vision/iqa_model.hpp"

namespace monitor::vision {

/// Pristine models consumed by the visual feature extractor.
struct IqaModels {
  IqaModel brisque;
  IqaModel niqe;

  /// Fits both models from every PNG/JPEG file in `dir` (sorted by name).
  static IqaModels fit_from_directory(const std::filesystem::path& dir);
};

std::vector<GrayImage> load_corpus(const std::filesystem::path& dir);

/// Seven columns: brisque, piqe, niqe (mean over the message's images, 0 when
/// it has none), then the event statistics of the message's event.
data::FeatureMatrix extract_visual_matrix(const data::Dataset& d, const IqaModels& models,
                                          const ImageIdentity& identity = pixel_identity());

}  // namespace monitor::vision
