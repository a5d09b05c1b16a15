#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "monitor/vision/image.hpp"

namespace monitor::vision {

enum class IqaKind { kBrisque, kNiqe };
const char* to_string(IqaKind k);

/// Affine map from a raw distance to the [1, 100] BRISQUE scale: the pristine
/// corpus median lands on 10 and the heavily distorted corpus median on 80.
struct ScoreCalibration {
  double pristine_median = 0.0;
  double distorted_median = 1.0;
  double map(double raw) const;
};

/// Pristine statistics: mean feature vector and regularised sample covariance.
struct IqaModel {
  IqaKind kind = IqaKind::kBrisque;
  Eigen::VectorXd mu;
  Eigen::MatrixXd covariance;
  /// Weight of the diagonal when the covariance is shrunk for scoring:
  /// (1 - s) * Sigma + s * diag(Sigma). Zero leaves Sigma as fitted.
  double shrinkage = 0.0;
  ScoreCalibration calibration;
  std::size_t sample_count = 0;

  int dimension() const { return static_cast<int>(mu.size()); }
  /// Throws when the covariance is not square/symmetric or sizes disagree.
  void validate() const;
};

inline constexpr double kCovarianceRegularization = 1e-6;

/// Mean and sample covariance of the rows, plus 1e-6 I.
IqaModel fit_gaussian_model(IqaKind kind, const std::vector<Eigen::VectorXd>& samples);

void save_iqa_model(const IqaModel& m, const std::filesystem::path& path);
IqaModel load_iqa_model(const std::filesystem::path& path);
std::string iqa_model_to_json(const IqaModel& m);
IqaModel iqa_model_from_json(const std::string& text);

}  // namespace monitor::vision
