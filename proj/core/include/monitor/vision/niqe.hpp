#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "monitor/vision/iqa_model.hpp"

namespace monitor::vision {

inline constexpr int kNiqePatchSize = 96;
inline constexpr double kNiqeSharpnessFraction = 0.75;

struct PatchFeatures {
  Eigen::VectorXd features;  // 36 entries, same layout as BRISQUE
  double sharpness = 0.0;    // mean local deviation over the patch
  int x = 0;
  int y = 0;
};

/// Features of every non-overlapping patch (96x96 at full scale, 48x48 at
/// half scale). An image smaller than one patch is treated as a single patch.
/// Patches whose statistics are degenerate are skipped.
std::vector<PatchFeatures> niqe_patch_features(const GrayImage& img);

/// Keeps the patches with sharpness >= 0.75 x the image's sharpest patch.
std::vector<PatchFeatures> select_sharp_patches(std::vector<PatchFeatures> patches);

/// Feature extractor used when fitting a pristine model.
enum class PristineFeatures { kBrisque, kNiqePatches };

/// Needs at least 10 images. BRISQUE uses one vector per image; NIQE pools
/// the sharp patches of every image.
IqaModel fit_pristine_model(std::span<const GrayImage> corpus, PristineFeatures features);

/// sqrt((mu1 - mu2)' ((S1 + S2) / 2)^-1 (mu1 - mu2)) between the pristine
/// model and a Gaussian fitted to the image's patches.
double niqe_score(const GrayImage& img, const IqaModel& pristine);

}  // namespace monitor::vision
