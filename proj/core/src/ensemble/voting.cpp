#include "monitor/ensemble/voting.hpp"

#include <cmath>
#include <numeric>

#include "monitor/error.hpp"

namespace monitor::ensemble {
namespace {

void check_shapes(const std::vector<Eigen::MatrixXd>& probs) {
  require(!probs.empty(), ErrorKind::kInvalidArgument, "voting needs at least one model");
  for (const auto& p : probs)
    require(p.cols() == 2 && p.rows() == probs.front().rows(), ErrorKind::kInvalidArgument,
            "voting: probability matrices differ in shape");
}

std::vector<Eigen::MatrixXd> all_probabilities(std::span<const learn::TrainedModel> base,
                                               const data::FeatureMatrix& x) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& m : base) out.push_back(learn::predict_proba(m, x));
  return out;
}

Prediction vote(const std::vector<Eigen::MatrixXd>& probs, std::span<const double> weights,
                double scale) {
  const Eigen::Index n = probs.front().rows();
  Prediction out;
  out.positive.resize(static_cast<std::size_t>(n));
  out.labels.resize(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    double real = 0.0, fake = 0.0;
    for (std::size_t m = 0; m < probs.size(); ++m) {
      real += weights[m] * probs[m](r, 0);
      fake += weights[m] * probs[m](r, 1);
    }
    out.positive[static_cast<std::size_t>(r)] = fake * scale;
    out.labels[static_cast<std::size_t>(r)] = fake >= real ? 1 : 0;
  }
  return out;
}

}  // namespace

Prediction soft_vote(const std::vector<Eigen::MatrixXd>& probabilities) {
  check_shapes(probabilities);
  const std::vector<double> ones(probabilities.size(), 1.0);
  return vote(probabilities, ones, 1.0 / static_cast<double>(probabilities.size()));
}

Prediction soft_vote(std::span<const learn::TrainedModel> base, const data::FeatureMatrix& x) {
  return soft_vote(all_probabilities(base, x));
}

Prediction weighted_vote(const std::vector<Eigen::MatrixXd>& probabilities,
                         std::span<const double> weights) {
  check_shapes(probabilities);
  require(weights.size() == probabilities.size(), ErrorKind::kInvalidArgument,
          "weighted vote: " + std::to_string(weights.size()) + " weights for " +
              std::to_string(probabilities.size()) + " models");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0 && std::isfinite(w), ErrorKind::kInvalidArgument,
            "vote weights must be non-negative");
    total += w;
  }
  require(std::abs(total - 1.0) < 1e-9, ErrorKind::kInvalidArgument, "vote weights must sum to 1");
  return vote(probabilities, weights, 1.0);
}

Prediction weighted_vote(std::span<const learn::TrainedModel> base,
                         std::span<const double> weights, const data::FeatureMatrix& x) {
  return weighted_vote(all_probabilities(base, x), weights);
}

std::vector<double> vote_weights(std::span<const double> accuracies) {
  const double total = std::accumulate(accuracies.begin(), accuracies.end(), 0.0);
  require(total > 0.0, ErrorKind::kDegenerate, "all model accuracies are zero");
  std::vector<double> w(accuracies.begin(), accuracies.end());
  for (double& v : w) v /= total;
  return w;
}

std::vector<double> compute_vote_weights(std::span<const learn::TrainedModel> base,
                                         const data::FeatureMatrix& x_train,
                                         const data::Labels& y_train) {
  require(y_train.size() == x_train.rows(), ErrorKind::kInvalidArgument,
          "vote weights: label count differs from row count");
  std::vector<double> acc;
  for (const auto& m : base) {
    const data::Labels pred = learn::predict_labels(m, x_train);
    int correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) correct += pred[i] == y_train[i];
    acc.push_back(static_cast<double>(correct) / static_cast<double>(pred.size()));
  }
  return vote_weights(acc);
}

}  // namespace monitor::ensemble
