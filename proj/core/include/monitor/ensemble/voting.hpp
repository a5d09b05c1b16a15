#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/model.hpp"

namespace monitor::ensemble {

/// Fused output: P(fake) per row and the voted label.
struct Prediction {
  std::vector<double> positive;
  data::Labels labels;
};

/// Sums the (real, fake) probability rows of every model and picks the larger
/// sum; an exact tie goes to fake. `positive` is the fake sum divided by the
/// model count.
Prediction soft_vote(const std::vector<Eigen::MatrixXd>& probabilities);
Prediction soft_vote(std::span<const learn::TrainedModel> base, const data::FeatureMatrix& x);

/// Weighted sum of probability rows; weights must be >= 0 and sum to 1.
Prediction weighted_vote(const std::vector<Eigen::MatrixXd>& probabilities,
                         std::span<const double> weights);
Prediction weighted_vote(std::span<const learn::TrainedModel> base,
                         std::span<const double> weights, const data::FeatureMatrix& x);

/// Accuracies normalized to sum 1. Throws kDegenerate when all are zero.
std::vector<double> vote_weights(std::span<const double> accuracies);
/// Training accuracy of each model, normalized.
std::vector<double> compute_vote_weights(std::span<const learn::TrainedModel> base,
                                         const data::FeatureMatrix& x_train,
                                         const data::Labels& y_train);

}  // namespace monitor::ensemble
