#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace monitor::cli {

/// Every setting of a pipeline run. Defaults follow the experimental protocol:
/// 0.8/0.2 stratified split, top 15 textual features with gain ratio > 0,
/// 5-fold grid search, stacking with 10 folds x 3 repeats.
struct PipelineConfig {
  std::filesystem::path dataset;
  std::string format;  // jsonl | csv; empty = from the file extension
  std::filesystem::path out = "monitor_out";
  std::filesystem::path resources;     // text word lists; empty = bundled
  std::filesystem::path pristine_dir;  // IQA model corpus; empty = bundled
  std::filesystem::path iqa_models;    // reuse brisque.json/niqe.json from here
  bool require_image = false;

  double test_fraction = 0.2;
  bool stratified = true;
  std::string split_mode = "message";  // message | event
  std::uint64_t seed = 42;

  double selection_threshold = 0.0;
  int top_k = 15;

  bool grid_search = true;
  int grid_folds = 5;
  std::string fusion = "early";  // early | late_equal | late_optimized
  std::vector<std::string> ensembles = {"soft_vote", "weighted_vote", "stacking", "blending",
                                        "super_learner"};
  int k = 10;
  int repeats = 3;
  double blend_test_fraction = 0.0;  // the outer split already holds out test rows
  double blend_val_fraction = 0.33;
};

/// Overrides fields present in a JSON object file. Unknown keys are rejected.
void apply_config_file(PipelineConfig& c, const std::filesystem::path& path);
void validate(const PipelineConfig& c);

}  // namespace monitor::cli
