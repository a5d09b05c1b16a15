#pragma once

#include "monitor/vision/image.hpp"

namespace monitor::vision {

/// Block-wise distortion estimate on the MSCN field.
///
/// Blocks are 16x16. A block is spatially active when the variance of its
/// coefficients is at least `activity_threshold`. An active block is distorted
/// when it shows a noticeable artifact (some 6-pixel run along one of its
/// edges has deviation below `edge_threshold`) or looks like noise (the
/// relative difference between the deviations of the central 8x8 region and
/// its surround is below `noise_threshold`). Artifact blocks score 1, noise
/// blocks score their variance divided by `noise_variance_scale`, clipped to
/// [0, 1]. The image score is
/// 100 * (sum + 1) / (active + 1).
struct PiqeOptions {
  int block = 16;
  int edge_run = 6;
  double activity_threshold = 0.1;
  double edge_threshold = 0.1;
  double noise_threshold = 0.3;
  double noise_variance_scale = 0.5;
};

struct PiqeResult {
  double score = 100.0;      // [0, 100], higher is worse
  bool uniform = false;      // no active block; score is 100
  int active_blocks = 0;
  int artifact_blocks = 0;
  int noise_blocks = 0;
};

PiqeResult piqe(const GrayImage& img, const PiqeOptions& options = {});
inline double piqe_score(const GrayImage& img) { return piqe(img).score; }

}  // namespace monitor::vision
