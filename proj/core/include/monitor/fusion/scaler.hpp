#pragma once

#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/matrix.hpp"

namespace monitor::fusion {

/// Per-column min-max scaling learned on training rows. Constant columns map
/// to 0; values outside the training range are clamped to [0, 1].
struct Scaler {
  bool fitted = false;
  std::vector<double> lo;
  std::vector<double> hi;

  friend bool operator==(const Scaler&, const Scaler&) = default;
};

Scaler fit_scaler(const data::FeatureMatrix& train);
Scaler fit_scaler(const learn::Matrix& train);

data::FeatureMatrix apply_scaler(const Scaler& s, const data::FeatureMatrix& x);
learn::Matrix apply_scaler(const Scaler& s, const learn::Matrix& x);

}  // namespace monitor::fusion
