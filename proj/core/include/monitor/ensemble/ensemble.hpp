#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/ensemble/voting.hpp"
#include "monitor/learn/matrix.hpp"
#include "monitor/learn/model.hpp"

namespace monitor::ensemble {

enum class EnsembleKind { kSoftVote, kWeightedVote, kStacking, kBlending, kSuperLearner };

const char* to_string(EnsembleKind k);
EnsembleKind parse_ensemble_kind(std::string_view text);
std::vector<EnsembleKind> all_ensemble_kinds();

struct Protocol {
  int k = 10;                     // stacking and super learner folds
  int repeats = 3;                // stacking CV repeats
  int meta_folds = 5;             // stacking meta-model validation folds
  double test_fraction = 0.5;     // blending holdout; 0 when the caller holds out data itself
  double val_fraction = 0.33;     // blending validation share of the remaining rows
  bool keep_repeat_columns = false;  // stacking: one meta column per (model, repeat)
  std::uint64_t seed = 0;
};

struct EnsembleModel {
  EnsembleKind kind = EnsembleKind::kSoftVote;
  std::vector<learn::TrainedModel> base;  // order fixed at fit time
  std::optional<learn::TrainedModel> meta;
  std::vector<double> weights;            // weighted vote only
  Protocol protocol;
  std::vector<std::string> feature_names;
  std::vector<double> meta_cv_accuracy;   // stacking: validation folds of the meta model
};

/// Records what the fitting protocols did so tests can audit coverage and
/// leakage, and split sizes for blending.
struct ProtocolTrace {
  struct Fit {
    int model = 0;
    int repeat = 0;
    int fold = 0;
    std::vector<std::size_t> train;
    std::vector<std::size_t> predicted;
  };
  std::vector<Fit> fits;
  learn::Matrix meta_features;        // rows x meta columns fed to the meta model
  std::vector<std::size_t> train_rows;  // blending
  std::vector<std::size_t> val_rows;
  std::vector<std::size_t> test_rows;
};

EnsembleModel fit_soft_vote(const std::vector<learn::ClassifierSpec>& specs,
                            const data::FeatureMatrix& x, const data::Labels& y);
EnsembleModel fit_weighted_vote(const std::vector<learn::ClassifierSpec>& specs,
                                const data::FeatureMatrix& x, const data::Labels& y);

/// Meta features per row: the out-of-fold P(fake) of each base model averaged
/// over the repeats of a stratified k-fold, followed by the original features.
/// The logistic-regression meta model is validated with its own k-fold (scores
/// reported only) and fitted on all rows; base models are refitted on all rows.
EnsembleModel fit_stacking(const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& protocol, ProtocolTrace* trace = nullptr);

/// Holdout blending. A stratified test_fraction of the rows is set aside (when
/// positive), the rest is split into train and val_fraction validation rows.
/// Base models fit on train, the logistic-regression blender fits on their
/// validation predictions (one column per model).
EnsembleModel fit_blending(const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& protocol, ProtocolTrace* trace = nullptr);

/// One shared k-fold split for all base models; the n x m out-of-fold
/// probability matrix trains the logistic-regression meta model; base models
/// are refitted on all rows.
EnsembleModel fit_super_learner(const std::vector<learn::ClassifierSpec>& specs,
                                const data::FeatureMatrix& x, const data::Labels& y,
                                const Protocol& protocol, ProtocolTrace* trace = nullptr);

EnsembleModel fit_ensemble(EnsembleKind kind, const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& protocol, ProtocolTrace* trace = nullptr);

Prediction ensemble_predict(const EnsembleModel& e, const data::FeatureMatrix& x);

/// Writes `manifest.json` plus one file per base model and the meta model
/// into `dir`.
void save_ensemble(const EnsembleModel& e, const std::filesystem::path& dir);
EnsembleModel load_ensemble(const std::filesystem::path& manifest);

}  // namespace monitor::ensemble
