#pragma once

#include "monitor/data/feature_matrix.hpp"

namespace monitor::fusion {

/// Column-wise concatenation, textual block first. Row ids must match in
/// order. Labels are taken from whichever block carries them; if both do,
/// they must agree.
data::FeatureMatrix early_fuse(const data::FeatureMatrix& textual,
                               const data::FeatureMatrix& visual);

}  // namespace monitor::fusion
