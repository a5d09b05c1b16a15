#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "monitor/data/synthetic.hpp"
#include "monitor/error.hpp"
#include "monitor/fusion/early.hpp"
#include "monitor/fusion/late.hpp"
#include "monitor/fusion/scaler.hpp"
#include "monitor/learn/model.hpp"
#include "monitor/rng.hpp"

using namespace monitor;
using namespace monitor::fusion;

namespace {

double accuracy(const std::vector<double>& p, const data::Labels& y) {
  double ok = 0;
  for (std::size_t i = 0; i < y.size(); ++i) ok += ((p[i] >= 0.5) == (y[i] == 1)) ? 1 : 0;
  return ok / static_cast<double>(y.size());
}

}  // namespace

TEST_CASE("min-max scaling") {
  const auto train = fixtures::matrix({"a", "b"}, {{0, 7}, {5, 7}, {10, 7}});
  const Scaler s = fit_scaler(train);
  const auto t = apply_scaler(s, train);
  CHECK(t.column(0) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(t.column(1) == std::vector<double>{0.0, 0.0, 0.0});
  const auto test = apply_scaler(s, fixtures::matrix({"a", "b"}, {{12, 9}, {-3, 1}}));
  CHECK(test.at(0, 0) == 1.0);
  CHECK(test.at(1, 0) == 0.0);
}

TEST_CASE("scaled training columns span [0, 1]") {
  const auto train = fixtures::blobs(50, 3, 1.0, 4);
  const auto t = apply_scaler(fit_scaler(train), train);
  for (std::size_t c = 0; c < t.cols(); ++c) {
    const auto col = t.column(c);
    CHECK(*std::min_element(col.begin(), col.end()) == 0.0);
    CHECK(*std::max_element(col.begin(), col.end()) == 1.0);
  }
}

TEST_CASE("applying an unfitted scaler fails") {
  CHECK_THROWS_AS(apply_scaler(Scaler{}, fixtures::matrix({"a"}, {{1}})), Error);
}

TEST_CASE("early fusion concatenates textual first") {
  std::vector<std::string> tnames, vnames{"brisque", "piqe", "niqe", "count_img", "ratio_img1",
                                          "ratio_img2", "ratio_img3"};
  for (int i = 0; i < 15; ++i) tnames.push_back("t" + std::to_string(i));
  const auto text = fixtures::matrix(tnames, {std::vector<double>(15, 1.0), std::vector<double>(15, 2.0)});
  const auto vis = fixtures::matrix(vnames, {std::vector<double>(7, 3.0), std::vector<double>(7, 4.0)});
  const auto fused = early_fuse(text, vis);
  CHECK(fused.cols() == 22);
  CHECK(fused.column_names()[0] == "t0");
  CHECK(fused.column_names()[15] == "brisque");
  CHECK(fused.modalities()[14] == data::Modality::kTextual);
  CHECK(fused.modalities()[15] == data::Modality::kVisual);
  CHECK(fused.row_ids() == text.row_ids());
  CHECK(fused.at(1, 15) == 4.0);

  const auto empty_visual = fixtures::matrix({}, {{}, {}});
  CHECK(early_fuse(text, empty_visual) == text);
}

TEST_CASE("early fusion rejects misaligned rows") {
  const auto a = fixtures::matrix({"a"}, {{1}, {2}});
  const auto b = fixtures::matrix({"b"}, {{1}});
  CHECK_THROWS_AS(early_fuse(a, b), Error);
}

TEST_CASE("equal-weight late fusion") {
  CHECK(late_fuse_equal(std::vector<double>{0.6}, std::vector<double>{0.8})[0] ==
        doctest::Approx(0.7));
  CHECK(late_fuse_equal(std::vector<double>{0.33}, std::vector<double>{0.33})[0] == 0.33);
  const auto mid = late_fuse_equal(std::vector<double>{0.4}, std::vector<double>{0.6});
  CHECK(mid[0] == 0.5);
  CHECK(learn::threshold_labels(mid)[0] == 1);
  const std::vector<double> a{0.1, 0.9, 0.3}, b{0.7, 0.2, 0.3};
  CHECK(late_fuse_equal(a, b) == late_fuse_equal(b, a));
  CHECK_THROWS_AS(late_fuse_equal(a, std::vector<double>{0.1}), Error);
}

TEST_CASE("optimized late fusion learns to trust the informative modality") {
  Rng rng(2);
  std::vector<double> pt, pv;
  data::Labels y;
  for (int i = 0; i < 200; ++i) {
    const int label = i % 2;
    y.push_back(label);
    pt.push_back(label ? 0.55 + 0.1 * rng.uniform() : 0.35 + 0.1 * rng.uniform());
    pv.push_back(label ? 0.2 * rng.uniform() : 0.8 + 0.2 * rng.uniform());
  }
  const LateFusionModel m = fit_late_fuse_optimized(pt, pv, y);
  CHECK(m.mode == LateMode::kOptimized);
  CHECK(accuracy(m.predict(pt, pv), y) >= accuracy(late_fuse_equal(pt, pv), y));
  CHECK(accuracy(m.predict(pt, pv), y) == 1.0);
}

TEST_CASE("optimized late fusion on perfect and uninformative inputs") {
  data::Labels y{0, 1, 0, 1, 1, 1, 0, 1};
  std::vector<double> p(y.begin(), y.end());
  CHECK(accuracy(fit_late_fuse_optimized(p, p, y).predict(p, p), y) == 1.0);

  const std::vector<double> flat(y.size(), 0.5);
  const auto out = fit_late_fuse_optimized(flat, flat, y).predict(flat, flat);
  for (double v : out) CHECK(v == doctest::Approx(5.0 / 8.0).epsilon(1e-4));
  CHECK_THROWS_AS(fit_late_fuse_optimized(flat, flat, data::Labels(8, 1)), Error);
}

TEST_CASE("late fusion ensemble trains two forests") {
  const auto m = data::make_two_modality_blobs({200, 1.6}, 3);
  const std::vector<std::string> tn{"text_a", "text_b"}, vn{"image_a", "image_b"};
  const auto text = m.select_columns(tn);
  const auto vis = m.select_columns(vn);
  learn::ClassifierSpec rf{learn::ModelKind::kRf, {{"n_estimators", 10.0}}, 1};
  const auto e = fit_late_fusion(LateMode::kEqual, rf, text, vis, m.labels(), 5, 1);
  CHECK(e.text_model.feature_names == tn);
  CHECK(e.visual_model.feature_names == vn);
  CHECK_FALSE(e.combiner.combiner.has_value());
  const auto p = e.predict(text, vis);
  CHECK(p == late_fuse_equal(learn::predict_positive(e.text_model, text),
                             learn::predict_positive(e.visual_model, vis)));
}
