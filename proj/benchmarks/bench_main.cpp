#include <benchmark/benchmark.h>

#include <vector>

#include "monitor/data/synthetic.hpp"
#include "monitor/learn/model.hpp"
#include "monitor/rng.hpp"
#include "monitor/selection/gain_ratio.hpp"
#include "monitor/vision/brisque.hpp"
#include "monitor/vision/image.hpp"
#include "monitor/vision/piqe.hpp"

using namespace monitor;

namespace {

const vision::GrayImage& photo() {
  static const vision::GrayImage img = vision::load_gray(std::filesystem::path(MONITOR_BENCH_DATA_DIR) / "pristine" / "p00.png");
  return img;
}

}  // namespace

static void BM_BrisqueFeatures(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vision::brisque_features(photo()));
}
BENCHMARK(BM_BrisqueFeatures)->Unit(benchmark::kMillisecond);

static void BM_PiqeScore(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vision::piqe_score(photo()));
}
BENCHMARK(BM_PiqeScore)->Unit(benchmark::kMillisecond);

static void BM_GainRatio(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> column(n);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(rng.below(2));
    column[i] = rng.normal() + labels[i];
  }
  for (auto _ : state) benchmark::DoNotOptimize(selection::gain_ratio(column, labels, 10));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GainRatio)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

static void BM_FitLearner(benchmark::State& state) {
  const auto x = data::make_two_modality_blobs({static_cast<std::size_t>(state.range(1)), 1.6}, 3);
  const auto kind = static_cast<learn::ModelKind>(state.range(0));
  const learn::ClassifierSpec spec = learn::default_spec(kind);
  state.SetLabel(std::string(learn::to_string(kind)));
  for (auto _ : state) benchmark::DoNotOptimize(learn::fit(spec, x));
}
BENCHMARK(BM_FitLearner)
    ->ArgsProduct({{static_cast<long>(learn::ModelKind::kCart), static_cast<long>(learn::ModelKind::kKnn),
                    static_cast<long>(learn::ModelKind::kSvm), static_cast<long>(learn::ModelKind::kRf),
                    static_cast<long>(learn::ModelKind::kLogreg)},
                   {500, 2000}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
