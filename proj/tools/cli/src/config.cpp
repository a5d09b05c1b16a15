#include "monitor_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "monitor/error.hpp"

namespace monitor::cli {

void apply_config_file(PipelineConfig& c, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kSchema, "config " + path.string() + ": " + e.what());
  }
  require(j.is_object(), ErrorKind::kSchema, "config must be a JSON object");
  // Relative paths inside the config resolve against the config's directory.
  const auto base = path.parent_path();
  auto as_path = [&](const nlohmann::json& v) {
    std::filesystem::path p = v.get<std::string>();
    return p.is_relative() && !p.empty() ? base / p : p;
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "dataset") c.dataset = as_path(v);
      else if (key == "format") c.format = v.get<std::string>();
      else if (key == "out") c.out = as_path(v);
      else if (key == "resources") c.resources = as_path(v);
      else if (key == "pristine_dir") c.pristine_dir = as_path(v);
      else if (key == "iqa_models") c.iqa_models = as_path(v);
      else if (key == "require_image") c.require_image = v.get<bool>();
      else if (key == "test_fraction") c.test_fraction = v.get<double>();
      else if (key == "stratified") c.stratified = v.get<bool>();
      else if (key == "split_mode") c.split_mode = v.get<std::string>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "selection_threshold") c.selection_threshold = v.get<double>();
      else if (key == "top_k") c.top_k = v.get<int>();
      else if (key == "grid_search") c.grid_search = v.get<bool>();
      else if (key == "grid_folds") c.grid_folds = v.get<int>();
      else if (key == "fusion") c.fusion = v.get<std::string>();
      else if (key == "ensembles") c.ensembles = v.get<std::vector<std::string>>();
      else if (key == "k") c.k = v.get<int>();
      else if (key == "repeats") c.repeats = v.get<int>();
      else if (key == "blend_test_fraction") c.blend_test_fraction = v.get<double>();
      else if (key == "blend_val_fraction") c.blend_val_fraction = v.get<double>();
      else fail(ErrorKind::kSchema, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kSchema, "config " + path.string() + ": " + e.what());
  }
}

void validate(const PipelineConfig& c) {
  auto check = [](bool ok, const std::string& what) {
    require(ok, ErrorKind::kInvalidArgument, what);
  };
  check(c.test_fraction > 0.0 && c.test_fraction < 1.0, "test_fraction must lie in (0, 1)");
  check(c.split_mode == "message" || c.split_mode == "event", "split_mode must be message or event");
  check(c.top_k >= 0, "top_k must be >= 0");
  check(c.grid_folds >= 2, "grid_folds must be >= 2");
  check(c.fusion == "early" || c.fusion == "late_equal" || c.fusion == "late_optimized",
        "fusion must be early, late_equal or late_optimized");
  static const std::set<std::string> kinds = {"soft_vote", "weighted_vote", "stacking",
                                              "blending", "super_learner"};
  for (const auto& e : c.ensembles) check(kinds.count(e) != 0, "unknown ensemble '" + e + "'");
  check(c.k >= 2, "k must be >= 2");
  check(c.repeats >= 1, "repeats must be >= 1");
  check(c.blend_test_fraction >= 0.0 && c.blend_test_fraction < 1.0,
        "blend_test_fraction must lie in [0, 1)");
  check(c.blend_val_fraction > 0.0 && c.blend_val_fraction < 1.0,
        "blend_val_fraction must lie in (0, 1)");
}

}  // namespace monitor::cli
