#include "monitor/data/split.hpp"
#include "monitor/ensemble/ensemble.hpp"
#include "monitor/error.hpp"
#include "monitor/learn/cv.hpp"
#include "monitor/rng.hpp"

namespace monitor::ensemble {
namespace {

learn::ClassifierSpec meta_spec(std::uint64_t seed) {
  return learn::default_spec(learn::ModelKind::kLogreg, seed);
}

std::string base_column(std::size_t i, const learn::ClassifierSpec& s) {
  return "base" + std::to_string(i) + "_" + learn::to_string(s.kind);
}

// Matrix of meta inputs: `probs` columns first, then `original` if given.
data::FeatureMatrix meta_matrix(const std::vector<std::string>& names,
                                const std::vector<std::vector<double>>& probs,
                                const data::FeatureMatrix* original,
                                const std::vector<std::string>& row_ids) {
  std::vector<std::string> cols = names;
  if (original) cols.insert(cols.end(), original->column_names().begin(),
                            original->column_names().end());
  const std::size_t n = row_ids.size();
  std::vector<double> values;
  values.reserve(n * cols.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& p : probs) values.push_back(p[r]);
    if (original) {
      const auto row = original->row(r);
      values.insert(values.end(), row.begin(), row.end());
    }
  }
  std::vector<data::Modality> mods(cols.size(), data::Modality::kTextual);
  if (original)
    for (std::size_t c = 0; c < original->cols(); ++c)
      mods[names.size() + c] = original->modalities()[c];
  return data::FeatureMatrix(std::move(cols), std::move(mods), row_ids, std::move(values));
}

void record(ProtocolTrace* trace, const data::FeatureMatrix& meta) {
  if (!trace) return;
  trace->meta_features = learn::to_matrix(meta);
}

learn::FoldObserver observer_for(ProtocolTrace* trace, int model) {
  if (!trace) return {};
  return [trace, model](const learn::FoldEvent& e) {
    trace->fits.push_back({model, e.repeat, e.fold,
                           std::vector<std::size_t>(e.train_rows.begin(), e.train_rows.end()),
                           std::vector<std::size_t>(e.predicted_rows.begin(),
                                                    e.predicted_rows.end())});
  };
}

void check_specs(const std::vector<learn::ClassifierSpec>& specs) {
  require(!specs.empty(), ErrorKind::kInvalidArgument, "an ensemble needs base models");
}

std::vector<learn::TrainedModel> fit_all(const std::vector<learn::ClassifierSpec>& specs,
                                         const data::FeatureMatrix& x, const data::Labels& y) {
  std::vector<learn::TrainedModel> out;
  for (const auto& s : specs) out.push_back(learn::fit(s, x, y));
  return out;
}

std::vector<std::string> meta_names(const std::vector<learn::ClassifierSpec>& specs, int repeats) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (repeats <= 1) names.push_back(base_column(i, specs[i]));
    else
      for (int r = 0; r < repeats; ++r)
        names.push_back(base_column(i, specs[i]) + "_r" + std::to_string(r));
  }
  return names;
}

}  // namespace

EnsembleModel fit_stacking(const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& p, ProtocolTrace* trace) {
  check_specs(specs);
  learn::require_binary_labels(y, x.rows());
  std::vector<std::vector<double>> columns;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const learn::CvResult cv = learn::cross_validate(specs[i], x, y, p.k, p.repeats, p.seed,
                                                     observer_for(trace, static_cast<int>(i)));
    if (p.keep_repeat_columns)
      for (const auto& rep : cv.oof) columns.push_back(rep);
    else
      columns.push_back(cv.mean_oof());
  }
  const auto names = meta_names(specs, p.keep_repeat_columns ? p.repeats : 1);
  const data::FeatureMatrix meta_x = meta_matrix(names, columns, &x, x.row_ids());
  record(trace, meta_x);

  EnsembleModel e;
  e.kind = EnsembleKind::kStacking;
  e.protocol = p;
  e.feature_names = x.column_names();
  const learn::ClassifierSpec ms = meta_spec(p.seed);
  e.meta_cv_accuracy =
      learn::cross_validate(ms, meta_x, y, p.meta_folds, 1, Rng::derive(p.seed, 101))
          .fold_accuracy;
  e.meta = learn::fit(ms, meta_x, y);
  e.base = fit_all(specs, x, y);
  return e;
}

EnsembleModel fit_blending(const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& p, ProtocolTrace* trace) {
  check_specs(specs);
  learn::require_binary_labels(y, x.rows());
  require(p.test_fraction >= 0.0 && p.test_fraction < 1.0, ErrorKind::kInvalidArgument,
          "blending test fraction must lie in [0, 1)");

  std::vector<std::size_t> rest(x.rows()), test;
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;
  if (p.test_fraction > 0.0) {
    const data::IndexSplit outer = data::split_indices(y, p.test_fraction, true, Rng::derive(p.seed, 1));
    rest = outer.train;
    test = outer.test;
  }
  data::Labels y_rest;
  for (std::size_t r : rest) y_rest.push_back(y[r]);
  const data::IndexSplit inner =
      data::split_indices(y_rest, p.val_fraction, true, Rng::derive(p.seed, 2));
  std::vector<std::size_t> train, val;
  for (std::size_t i : inner.train) train.push_back(rest[i]);
  for (std::size_t i : inner.test) val.push_back(rest[i]);

  data::Labels y_train, y_val;
  for (std::size_t r : train) y_train.push_back(y[r]);
  for (std::size_t r : val) y_val.push_back(y[r]);
  require(y_val.size() >= 2, ErrorKind::kInvalidArgument, "blending validation split is too small");
  learn::require_binary_labels(y_train, train.size());
  learn::require_binary_labels(y_val, val.size());

  const data::FeatureMatrix x_train = x.select_rows(train);
  const data::FeatureMatrix x_val = x.select_rows(val);
  EnsembleModel e;
  e.kind = EnsembleKind::kBlending;
  e.protocol = p;
  e.feature_names = x.column_names();
  e.base = fit_all(specs, x_train, y_train);

  std::vector<std::vector<double>> columns;
  for (std::size_t i = 0; i < e.base.size(); ++i) {
    columns.push_back(learn::predict_positive(e.base[i], x_val));
    if (trace) trace->fits.push_back({static_cast<int>(i), 0, 0, train, val});
  }
  const data::FeatureMatrix meta_x = meta_matrix(meta_names(specs, 1), columns, nullptr,
                                                 x_val.row_ids());
  record(trace, meta_x);
  if (trace) {
    trace->train_rows = train;
    trace->val_rows = val;
    trace->test_rows = test;
  }
  e.meta = learn::fit(meta_spec(p.seed), meta_x, y_val);
  return e;
}

EnsembleModel fit_super_learner(const std::vector<learn::ClassifierSpec>& specs,
                                const data::FeatureMatrix& x, const data::Labels& y,
                                const Protocol& p, ProtocolTrace* trace) {
  check_specs(specs);
  learn::require_binary_labels(y, x.rows());
  const learn::FoldPlan plan = learn::stratified_kfold(y, p.k, p.seed);
  std::vector<std::vector<double>> columns;
  for (std::size_t i = 0; i < specs.size(); ++i)
    columns.push_back(
        learn::cross_validate(specs[i], x, y, plan, observer_for(trace, static_cast<int>(i)))
            .oof.front());
  const data::FeatureMatrix meta_x = meta_matrix(meta_names(specs, 1), columns, nullptr,
                                                 x.row_ids());
  record(trace, meta_x);

  EnsembleModel e;
  e.kind = EnsembleKind::kSuperLearner;
  e.protocol = p;
  e.feature_names = x.column_names();
  e.base = fit_all(specs, x, y);
  e.meta = learn::fit(meta_spec(p.seed), meta_x, y);
  return e;
}

EnsembleModel fit_soft_vote(const std::vector<learn::ClassifierSpec>& specs,
                            const data::FeatureMatrix& x, const data::Labels& y) {
  check_specs(specs);
  EnsembleModel e;
  e.kind = EnsembleKind::kSoftVote;
  e.feature_names = x.column_names();
  e.base = fit_all(specs, x, y);
  return e;
}

EnsembleModel fit_weighted_vote(const std::vector<learn::ClassifierSpec>& specs,
                                const data::FeatureMatrix& x, const data::Labels& y) {
  EnsembleModel e = fit_soft_vote(specs, x, y);
  e.kind = EnsembleKind::kWeightedVote;
  e.weights = compute_vote_weights(e.base, x, y);
  return e;
}

EnsembleModel fit_ensemble(EnsembleKind kind, const std::vector<learn::ClassifierSpec>& specs,
                           const data::FeatureMatrix& x, const data::Labels& y,
                           const Protocol& protocol, ProtocolTrace* trace) {
  EnsembleModel e;
  switch (kind) {
    case EnsembleKind::kSoftVote: e = fit_soft_vote(specs, x, y); break;
    case EnsembleKind::kWeightedVote: e = fit_weighted_vote(specs, x, y); break;
    case EnsembleKind::kStacking: return fit_stacking(specs, x, y, protocol, trace);
    case EnsembleKind::kBlending: return fit_blending(specs, x, y, protocol, trace);
    case EnsembleKind::kSuperLearner: return fit_super_learner(specs, x, y, protocol, trace);
  }
  e.protocol = protocol;
  return e;
}

Prediction ensemble_predict(const EnsembleModel& e, const data::FeatureMatrix& x) {
  require(!e.base.empty(), ErrorKind::kState, "ensemble has no base models");
  std::vector<Eigen::MatrixXd> probs;
  for (const auto& m : e.base) probs.push_back(learn::predict_proba(m, x));
  switch (e.kind) {
    case EnsembleKind::kSoftVote: return soft_vote(probs);
    case EnsembleKind::kWeightedVote: return weighted_vote(probs, e.weights);
    default: break;
  }
  require(e.meta.has_value(), ErrorKind::kState, "ensemble has no meta model");

  std::vector<std::vector<double>> columns;
  const int copies =
      e.kind == EnsembleKind::kStacking && e.protocol.keep_repeat_columns ? e.protocol.repeats : 1;
  std::vector<learn::ClassifierSpec> specs;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    specs.push_back(e.base[i].spec);
    std::vector<double> p(static_cast<std::size_t>(probs[i].rows()));
    for (std::size_t r = 0; r < p.size(); ++r) p[r] = probs[i](static_cast<Eigen::Index>(r), 1);
    for (int c = 0; c < copies; ++c) columns.push_back(p);
  }
  data::FeatureMatrix original;
  const bool stacking = e.kind == EnsembleKind::kStacking;
  if (stacking) original = x.select_columns(e.feature_names);
  const data::FeatureMatrix meta_x =
      meta_matrix(meta_names(specs, copies), columns, stacking ? &original : nullptr, x.row_ids());
  Prediction out;
  out.positive = learn::predict_positive(*e.meta, meta_x);
  out.labels = learn::threshold_labels(out.positive);
  return out;
}

}  // namespace monitor::ensemble
