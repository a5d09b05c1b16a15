#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/fusion/scaler.hpp"
#include "monitor/learn/knn.hpp"
#include "monitor/learn/logreg.hpp"
#include "monitor/learn/spec.hpp"
#include "monitor/learn/svm.hpp"
#include "monitor/learn/tree.hpp"

namespace monitor::learn {

using Estimator = std::variant<DecisionTree, KnnModel, SvmModel, RandomForest, LogisticModel>;

/// A fitted classifier. Inputs are min-max scaled with the scaler learned on
/// the training matrix before they reach the estimator.
struct TrainedModel {
  ClassifierSpec spec;
  std::vector<std::string> feature_names;
  fusion::Scaler scaler;
  Estimator estimator;

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

/// Throws kSingleClass when y holds one class, kInvalidArgument on shape errors.
TrainedModel fit(const ClassifierSpec& spec, const data::FeatureMatrix& x, const data::Labels& y);
TrainedModel fit(const ClassifierSpec& spec, const data::FeatureMatrix& x);  // uses x.labels()

/// n x 2 with columns (real, fake). Throws kFeatureMismatch naming missing or
/// unexpected columns when x does not carry exactly the fitted feature set;
/// a reordered but otherwise identical set is realigned.
Eigen::MatrixXd predict_proba(const TrainedModel& m, const data::FeatureMatrix& x);
std::vector<double> predict_positive(const TrainedModel& m, const data::FeatureMatrix& x);
/// fake when P(fake) >= 0.5.
data::Labels predict_labels(const TrainedModel& m, const data::FeatureMatrix& x);
data::Labels threshold_labels(const std::vector<double>& positive);

/// Versioned JSON. Doubles are written in shortest round-trip form, so a
/// reloaded model predicts bit-identically.
std::string model_to_json(const TrainedModel& m);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& m, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace monitor::learn
