#include "monitor/ensemble/ensemble.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monitor/error.hpp"

namespace monitor::ensemble {
namespace {

using nlohmann::json;

constexpr const char* kFormat = "monitor.ensemble";
constexpr int kVersion = 1;

}  // namespace

const char* to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::kSoftVote: return "soft_vote";
    case EnsembleKind::kWeightedVote: return "weighted_vote";
    case EnsembleKind::kStacking: return "stacking";
    case EnsembleKind::kBlending: return "blending";
    case EnsembleKind::kSuperLearner: return "super_learner";
  }
  return "?";
}

std::vector<EnsembleKind> all_ensemble_kinds() {
  return {EnsembleKind::kSoftVote, EnsembleKind::kWeightedVote, EnsembleKind::kStacking,
          EnsembleKind::kBlending, EnsembleKind::kSuperLearner};
}

EnsembleKind parse_ensemble_kind(std::string_view text) {
  for (EnsembleKind k : all_ensemble_kinds())
    if (text == to_string(k)) return k;
  fail(ErrorKind::kInvalidArgument, "unknown ensemble kind '" + std::string(text) + "'");
}

void save_ensemble(const EnsembleModel& e, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json base = json::array();
  for (std::size_t i = 0; i < e.base.size(); ++i) {
    const std::string file =
        "base" + std::to_string(i) + "_" + learn::to_string(e.base[i].spec.kind) + ".json";
    learn::save_model(e.base[i], dir / file);
    base.push_back(file);
  }
  json meta = nullptr;
  if (e.meta) {
    learn::save_model(*e.meta, dir / "meta.json");
    meta = "meta.json";
  }
  const Protocol& p = e.protocol;
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["kind"] = to_string(e.kind);
  j["base_models"] = base;
  j["meta_model"] = meta;
  j["weights"] = e.weights;
  j["feature_names"] = e.feature_names;
  j["meta_cv_accuracy"] = e.meta_cv_accuracy;
  j["protocol"] = {{"k", p.k},
                   {"repeats", p.repeats},
                   {"meta_folds", p.meta_folds},
                   {"test_fraction", p.test_fraction},
                   {"val_fraction", p.val_fraction},
                   {"keep_repeat_columns", p.keep_repeat_columns},
                   {"seed", p.seed}};
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + (dir / "manifest.json").string());
  out << j.dump(1) << "\n";
}

EnsembleModel load_ensemble(const std::filesystem::path& manifest) {
  std::ifstream in(manifest, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read " + manifest.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::filesystem::path dir = manifest.parent_path();
  try {
    const json j = json::parse(ss.str());
    require(j.at("format").get<std::string>() == kFormat, ErrorKind::kSchema,
            "not an ensemble manifest");
    require(j.at("version").get<int>() == kVersion, ErrorKind::kSchema,
            "unsupported manifest version");
    EnsembleModel e;
    e.kind = parse_ensemble_kind(j.at("kind").get<std::string>());
    for (const auto& f : j.at("base_models")) e.base.push_back(learn::load_model(dir / f.get<std::string>()));
    if (!j.at("meta_model").is_null())
      e.meta = learn::load_model(dir / j.at("meta_model").get<std::string>());
    e.weights = j.at("weights").get<std::vector<double>>();
    e.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    e.meta_cv_accuracy = j.at("meta_cv_accuracy").get<std::vector<double>>();
    const json& p = j.at("protocol");
    e.protocol.k = p.at("k").get<int>();
    e.protocol.repeats = p.at("repeats").get<int>();
    e.protocol.meta_folds = p.at("meta_folds").get<int>();
    e.protocol.test_fraction = p.at("test_fraction").get<double>();
    e.protocol.val_fraction = p.at("val_fraction").get<double>();
    e.protocol.keep_repeat_columns = p.at("keep_repeat_columns").get<bool>();
    e.protocol.seed = p.at("seed").get<std::uint64_t>();
    return e;
  } catch (const json::exception& ex) {
    fail(ErrorKind::kSchema, std::string("malformed ensemble manifest: ") + ex.what());
  }
}

}  // namespace monitor::ensemble
