#include "monitor/vision/brisque.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "monitor/error.hpp"
#include "monitor/vision/distort.hpp"
#include "monitor/vision/ggd.hpp"
#include "monitor/vision/mscn.hpp"
#include "monitor/vision/niqe.hpp"
#include "scale_features.hpp"

namespace monitor::vision {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Eigen::VectorXd to_vector(const BrisqueVector& f) {
  return Eigen::Map<const Eigen::VectorXd>(f.data(), kBrisqueDim);
}

}  // namespace

namespace detail {

ScaleFeatures scale_features(const Plane& coefficients, std::size_t min_samples) {
  ScaleFeatures out{};
  const GgdParams g = fit_ggd(coefficients.data);
  out[0] = g.alpha;
  out[1] = g.variance;
  const Orientation orientations[] = {Orientation::kHorizontal, Orientation::kVertical,
                                      Orientation::kMainDiagonal, Orientation::kAntiDiagonal};
  std::size_t k = 2;
  for (auto o : orientations) {
    const auto products = pairwise_products(coefficients, o);
    const AggdParams a = fit_aggd(products, min_samples);
    out[k++] = a.alpha;
    out[k++] = a.mean_offset;
    out[k++] = a.sigma_l * a.sigma_l;
    out[k++] = a.sigma_r * a.sigma_r;
  }
  return out;
}

}  // namespace detail

std::vector<std::string> brisque_feature_names() {
  std::vector<std::string> names;
  const char* dirs[] = {"h", "v", "d1", "d2"};
  for (int s = 1; s <= 2; ++s) {
    const std::string p = "s" + std::to_string(s) + "_";
    names.push_back(p + "ggd_alpha");
    names.push_back(p + "ggd_variance");
    for (const char* d : dirs) {
      names.push_back(p + d + "_alpha");
      names.push_back(p + d + "_mean");
      names.push_back(p + d + "_var_left");
      names.push_back(p + d + "_var_right");
    }
  }
  return names;
}

BrisqueVector brisque_fallback_vector() {
  BrisqueVector v{};
  for (int s = 0; s < 2; ++s) {
    const int base = s * 18;
    v[base] = kAlphaMax;
    for (int o = 0; o < 4; ++o) v[base + 2 + 4 * o] = kAlphaMax;
  }
  return v;
}

BrisqueVector brisque_features(const GrayImage& img) {
  BrisqueVector out{};
  try {
    Plane scale = img.plane();
    for (int s = 0; s < 2; ++s) {
      const auto f = detail::scale_features(mscn_field(scale).coefficients, 16);
      std::copy(f.begin(), f.end(), out.begin() + s * 18);
      if (s == 0) scale = downsample_half(scale);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerate) throw;
    return brisque_fallback_vector();
  }
  return out;
}

double brisque_distance(const BrisqueVector& features, const IqaModel& model) {
  require(model.dimension() == kBrisqueDim, ErrorKind::kInvalidArgument,
          "BRISQUE needs a 36-dimensional model, got " + std::to_string(model.dimension()));
  const Eigen::VectorXd diff = to_vector(features) - model.mu;
  Eigen::MatrixXd cov = (1.0 - model.shrinkage) * model.covariance;
  cov.diagonal() += model.shrinkage * model.covariance.diagonal();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(cov);
  require(ldlt.info() == Eigen::Success && ldlt.isPositive(), ErrorKind::kDegenerate,
          "BRISQUE covariance is not positive definite");
  return std::sqrt(std::max(0.0, diff.dot(ldlt.solve(diff))));
}

double brisque_score(const GrayImage& img, const IqaModel& model) {
  return model.calibration.map(brisque_distance(brisque_features(img), model));
}

IqaModel fit_brisque_model(std::span<const GrayImage> corpus,
                           const BrisqueCalibrationOptions& options) {
  IqaModel model = fit_pristine_model(corpus, PristineFeatures::kBrisque);
  model.shrinkage = options.shrinkage;
  std::vector<double> clean, distorted;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    clean.push_back(brisque_distance(brisque_features(corpus[i]), model));
    const auto noisy = add_gaussian_noise(corpus[i], options.noise_sigma, options.seed + i);
    distorted.push_back(brisque_distance(brisque_features(noisy), model));
    const auto blurred = gaussian_blur(corpus[i], options.blur_sigma);
    distorted.push_back(brisque_distance(brisque_features(blurred), model));
  }
  model.calibration.pristine_median = median(clean);
  model.calibration.distorted_median = median(distorted);
  require(model.calibration.distorted_median > model.calibration.pristine_median,
          ErrorKind::kDegenerate, "distorted corpus does not score worse than the pristine corpus");
  return model;
}

}  // namespace monitor::vision
