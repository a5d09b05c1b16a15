#include "monitor/fusion/late.hpp"

#include "monitor/error.hpp"
#include "monitor/learn/cv.hpp"

namespace monitor::fusion {
namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), ErrorKind::kInvalidArgument,
          "late fusion: probability vectors differ in length");
  for (std::size_t i = 0; i < a.size(); ++i)
    require(a[i] >= 0.0 && a[i] <= 1.0 && b[i] >= 0.0 && b[i] <= 1.0,
            ErrorKind::kInvalidArgument, "late fusion: probabilities must lie in [0, 1]");
}

learn::Matrix pair_matrix(std::span<const double> a, std::span<const double> b) {
  learn::Matrix x(static_cast<Eigen::Index>(a.size()), 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    x(static_cast<Eigen::Index>(i), 0) = a[i];
    x(static_cast<Eigen::Index>(i), 1) = b[i];
  }
  return x;
}

}  // namespace

const char* to_string(LateMode m) { return m == LateMode::kEqual ? "equal" : "optimized"; }

std::vector<double> late_fuse_equal(std::span<const double> p_text,
                                    std::span<const double> p_visual) {
  check_pair(p_text, p_visual);
  std::vector<double> out(p_text.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (p_text[i] + p_visual[i]) / 2.0;
  return out;
}

std::vector<double> LateFusionModel::predict(std::span<const double> p_text,
                                             std::span<const double> p_visual) const {
  if (mode == LateMode::kEqual) return late_fuse_equal(p_text, p_visual);
  require(combiner.has_value(), ErrorKind::kState, "optimized late fusion is not fitted");
  check_pair(p_text, p_visual);
  std::vector<double> out(p_text.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double row[2] = {p_text[i], p_visual[i]};
    out[i] = combiner->predict_positive(row);
  }
  return out;
}

LateFusionModel fit_late_fuse_optimized(std::span<const double> p_text,
                                        std::span<const double> p_visual,
                                        const data::Labels& y) {
  check_pair(p_text, p_visual);
  learn::require_binary_labels(y, p_text.size());
  LateFusionModel m;
  m.mode = LateMode::kOptimized;
  m.combiner = learn::fit_logistic(pair_matrix(p_text, p_visual), y);
  return m;
}

std::vector<double> LateFusionEnsemble::predict(const data::FeatureMatrix& textual,
                                                const data::FeatureMatrix& visual) const {
  const auto pt = learn::predict_positive(text_model, textual);
  const auto pv = learn::predict_positive(visual_model, visual);
  return combiner.predict(pt, pv);
}

LateFusionEnsemble fit_late_fusion(LateMode mode, const learn::ClassifierSpec& rf_spec,
                                   const data::FeatureMatrix& textual,
                                   const data::FeatureMatrix& visual, const data::Labels& y,
                                   int folds, std::uint64_t seed) {
  LateFusionEnsemble e;
  e.text_model = learn::fit(rf_spec, textual, y);
  e.visual_model = learn::fit(rf_spec, visual, y);
  if (mode == LateMode::kEqual) return e;
  const learn::FoldPlan plan = learn::stratified_kfold(y, folds, seed);
  const auto pt = learn::cross_validate(rf_spec, textual, y, plan).mean_oof();
  const auto pv = learn::cross_validate(rf_spec, visual, y, plan).mean_oof();
  e.combiner = fit_late_fuse_optimized(pt, pv, y);
  return e;
}

}  // namespace monitor::fusion
