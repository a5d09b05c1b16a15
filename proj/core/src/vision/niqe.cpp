#include "monitor/vision/niqe.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "monitor/error.hpp"
#include "monitor/vision/brisque.hpp"
#include "monitor/vision/mscn.hpp"
#include "scale_features.hpp"

namespace monitor::vision {
namespace {

Plane sub_plane(const Plane& p, int x0, int y0, int w, int h) {
  Plane out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out(x, y) = p(x0 + x, y0 + y);
  return out;
}

double mean_over(const Plane& p, int x0, int y0, int w, int h) {
  double acc = 0.0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) acc += p(x0 + x, y0 + y);
  return acc / (static_cast<double>(w) * h);
}

}  // namespace

std::vector<PatchFeatures> niqe_patch_features(const GrayImage& img) {
  const MscnField full = mscn_field(img.plane());
  const Plane half_image = downsample_half(img.plane());
  const MscnField half = mscn_field(half_image);

  int patch = kNiqePatchSize;
  int nx = img.width() / patch;
  int ny = img.height() / patch;
  int pw = patch, ph = patch;
  if (nx == 0 || ny == 0) {
    // Smaller than one patch: the whole (even-cropped) image is the patch.
    nx = ny = 1;
    pw = img.width() & ~1;
    ph = img.height() & ~1;
  }

  std::vector<PatchFeatures> out;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int x = i * pw, y = j * ph;
      PatchFeatures pf;
      pf.x = x;
      pf.y = y;
      pf.sharpness = mean_over(full.local_sigma, x, y, pw, ph);
      pf.features.resize(kBrisqueDim);
      try {
        const auto s1 = detail::scale_features(sub_plane(full.coefficients, x, y, pw, ph), 16);
        const auto s2 = detail::scale_features(
            sub_plane(half.coefficients, x / 2, y / 2, pw / 2, ph / 2), 16);
        for (int k = 0; k < 18; ++k) {
          pf.features[k] = s1[k];
          pf.features[18 + k] = s2[k];
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerate) throw;
        continue;
      }
      out.push_back(std::move(pf));
    }
  }
  return out;
}

std::vector<PatchFeatures> select_sharp_patches(std::vector<PatchFeatures> patches) {
  if (patches.empty()) return patches;
  double max_sharp = 0.0;
  for (const auto& p : patches) max_sharp = std::max(max_sharp, p.sharpness);
  std::vector<PatchFeatures> kept;
  for (auto& p : patches) {
    if (p.sharpness >= kNiqeSharpnessFraction * max_sharp) kept.push_back(std::move(p));
  }
  return kept;
}

IqaModel fit_pristine_model(std::span<const GrayImage> corpus, PristineFeatures features) {
  require(corpus.size() >= 10, ErrorKind::kInvalidArgument,
          "pristine corpus needs at least 10 images, got " + std::to_string(corpus.size()));
  std::vector<Eigen::VectorXd> samples;
  if (features == PristineFeatures::kBrisque) {
    for (const auto& img : corpus) {
      const auto f = brisque_features(img);
      samples.emplace_back(Eigen::Map<const Eigen::VectorXd>(f.data(), kBrisqueDim));
    }
    return fit_gaussian_model(IqaKind::kBrisque, samples);
  }
  for (const auto& img : corpus) {
    for (auto& p : select_sharp_patches(niqe_patch_features(img))) {
      samples.push_back(std::move(p.features));
    }
  }
  require(samples.size() >= 2, ErrorKind::kDegenerate,
          "pristine corpus yields fewer than two usable patches");
  return fit_gaussian_model(IqaKind::kNiqe, samples);
}

double niqe_score(const GrayImage& img, const IqaModel& pristine) {
  pristine.validate();
  require(pristine.dimension() == kBrisqueDim, ErrorKind::kInvalidArgument,
          "NIQE needs a 36-dimensional model");
  const auto patches = niqe_patch_features(img);
  require(!patches.empty(), ErrorKind::kDegenerate, "image has no usable NIQE patch");
  const auto d = pristine.mu.size();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (const auto& p : patches) mu += p.features;
  mu /= static_cast<double>(patches.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  if (patches.size() > 1) {
    for (const auto& p : patches) {
      const Eigen::VectorXd c = p.features - mu;
      cov.noalias() += c * c.transpose();
    }
    cov /= static_cast<double>(patches.size() - 1);
  }
  const Eigen::MatrixXd pooled = 0.5 * (pristine.covariance + cov);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(pooled);
  require(ldlt.info() == Eigen::Success && ldlt.isPositive() &&
              ldlt.vectorD().minCoeff() > 0.0,
          ErrorKind::kDegenerate, "singular pooled covariance");
  const Eigen::VectorXd diff = pristine.mu - mu;
  return std::sqrt(std::max(0.0, diff.dot(ldlt.solve(diff))));
}

}  // namespace monitor::vision
