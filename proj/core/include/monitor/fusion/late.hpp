#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/logreg.hpp"
#include "monitor/learn/model.hpp"

namespace monitor::fusion {

/// Row-wise mean of the two fake probabilities.
std::vector<double> late_fuse_equal(std::span<const double> p_text,
                                    std::span<const double> p_visual);

enum class LateMode { kEqual, kOptimized };

const char* to_string(LateMode m);

/// Equal mode has no fitted state; optimized mode holds a logistic regression
/// over the pair (p_text, p_visual).
struct LateFusionModel {
  LateMode mode = LateMode::kEqual;
  std::optional<learn::LogisticModel> combiner;

  std::vector<double> predict(std::span<const double> p_text,
                              std::span<const double> p_visual) const;
};

/// The probabilities must be out-of-fold predictions on the training rows.
LateFusionModel fit_late_fuse_optimized(std::span<const double> p_text,
                                        std::span<const double> p_visual,
                                        const data::Labels& y);

/// One random forest per modality combined by a LateFusionModel. In
/// optimized mode the combiner is fitted on k-fold out-of-fold forest
/// probabilities; the forests used at prediction time are refitted on all
/// training rows.
struct LateFusionEnsemble {
  LateFusionModel combiner;
  learn::TrainedModel text_model;
  learn::TrainedModel visual_model;

  std::vector<double> predict(const data::FeatureMatrix& textual,
                              const data::FeatureMatrix& visual) const;
};

LateFusionEnsemble fit_late_fusion(LateMode mode, const learn::ClassifierSpec& rf_spec,
                                   const data::FeatureMatrix& textual,
                                   const data::FeatureMatrix& visual, const data::Labels& y,
                                   int folds, std::uint64_t seed);

}  // namespace monitor::fusion
