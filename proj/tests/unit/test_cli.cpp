#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "monitor/data/feature_matrix.hpp"
#include "monitor/learn/model.hpp"
#include "monitor_cli/cli.hpp"

namespace fs = std::filesystem;
using monitor::cli::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string mini() { return (fixtures::data_dir() / "mini" / "messages.jsonl").string(); }

// One extraction shared by the training tests; later runs reuse its IQA models.
const fs::path& extracted() {
  static const fs::path dir = [] {
    auto d = fixtures::scratch("cli_extract");
    const Run r = run({"extract", "--dataset", mini(), "--out", d.string()});
    REQUIRE(r.code == 0);
    return d;
  }();
  return dir;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

double model_accuracy(const fs::path& metrics, const std::string& name) {
  const nlohmann::json doc = read_json(metrics);
  for (const auto& m : doc["models"])
    if (m["model"] == name) return m["accuracy"].get<double>();
  FAIL("model missing from metrics.json: " << name);
  return -1;
}

}  // namespace

TEST_CASE("extract writes both matrices and reports column counts") {
  const fs::path d = extracted();
  const auto textual = monitor::data::load_feature_matrix(d / "features" / "textual.csv");
  const auto visual = monitor::data::load_feature_matrix(d / "features" / "visual.csv");
  CHECK(visual.cols() == 7);
  CHECK(textual.rows() == 50);
  CHECK(visual.rows() == 50);
  CHECK(fs::exists(d / "iqa" / "brisque.json"));
  CHECK(fs::exists(d / "iqa" / "niqe.json"));
  CHECK(fs::exists(d / "run.log"));

  auto again = fixtures::scratch("cli_extract_again");
  const Run r = run({"extract", "--dataset", mini(), "--out", again.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("visual columns: 7") != std::string::npos);
  for (const char* f : {"textual.csv", "visual.csv", "events.csv", "excluded.txt"})
    CHECK(slurp(again / "features" / f) == slurp(d / "features" / f));
}

TEST_CASE("require-image excludes the ten imageless messages") {
  auto d = fixtures::scratch("cli_require_image");
  const Run r = run({"extract", "--dataset", mini(), "--out", d.string(), "--require-image",
                     "--iqa-models", (extracted() / "iqa").string()});
  REQUIRE(r.code == 0);
  std::istringstream ex(slurp(d / "features" / "excluded.txt"));
  int lines = 0;
  for (std::string s; std::getline(ex, s);) lines += s.empty() ? 0 : 1;
  CHECK(lines == 10);
  CHECK(r.out.find("excluded 10") != std::string::npos);
  CHECK(monitor::data::load_feature_matrix(d / "features" / "visual.csv").rows() == 40);
}

TEST_CASE("schema and IO failures exit with 2") {
  auto d = fixtures::scratch("cli_schema");
  CHECK(run({"extract", "--dataset", (d / "absent.jsonl").string(), "--out", d.string()}).code == 2);
  std::ofstream(d / "bad.jsonl") << "{not json\n";
  const Run r = run({"extract", "--dataset", (d / "bad.jsonl").string(), "--out", d.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"train", "--fusion"}).code == 1);
  CHECK(run({"train", "--out", "x", "--fusion", "sideways"}).code == 1);
}

TEST_CASE("single-class training data exits with 3") {
  auto d = fixtures::scratch("cli_single_class");
  std::ofstream data(d / "real.jsonl");
  for (int i = 0; i < 12; ++i)
    data << R"({"id": "r)" << i << R"(", "event_id": "e)" << i % 3
         << R"(", "text": "Plain report number )" << i
         << R"( today.", "label": "real", "retweet_count": )" << i
         << R"(, "like_count": 1, "user": {"followers": 10, "friends": 2, "posts": 3, )"
            R"("times_listed": 0, "likes_given": 1, "verified": false, "has_profile_image": true, )"
            R"("has_homepage_url": false}, "image_paths": []})"
         << "\n";
  data.close();
  REQUIRE(run({"extract", "--dataset", (d / "real.jsonl").string(), "--out", d.string(),
               "--iqa-models", (extracted() / "iqa").string()})
              .code == 0);
  const Run r = run({"train", "--out", d.string(), "--no-grid"});
  CHECK(r.code == 3);
}

TEST_CASE("stacking writes a manifest with four base models and a meta model") {
  auto d = fixtures::scratch("cli_stacking");
  const Run r = run({"train", "--out", d.string(), "--features", (extracted() / "features").string(),
                     "--ensemble", "stacking", "--no-grid"});
  REQUIRE(r.code == 0);
  const auto manifest = read_json(d / "models" / "stacking" / "manifest.json");
  CHECK(manifest["base_models"].size() == 4);
  CHECK(manifest["meta_model"] == "meta.json");
  for (const auto& b : manifest["base_models"])
    CHECK(fs::exists(d / "models" / "stacking" / b.get<std::string>()));
  CHECK(fs::exists(d / "models" / "stacking" / "meta.json"));
  CHECK_FALSE(fs::exists(d / "models" / "blending"));
  CHECK(fs::exists(d / "report" / "metrics.json"));
}

TEST_CASE("late equal fusion trains one forest per modality") {
  auto d = fixtures::scratch("cli_late");
  const Run r = run({"train", "--out", d.string(), "--features", (extracted() / "features").string(),
                     "--fusion", "late_equal", "--ensemble", "soft_vote", "--no-grid"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(d / "models" / "late" / "text_rf.json"));
  CHECK(fs::exists(d / "models" / "late" / "visual_rf.json"));
  const auto text_rf = monitor::learn::load_model(d / "models" / "late" / "text_rf.json");
  CHECK(text_rf.spec.kind == monitor::learn::ModelKind::kRf);
  CHECK(fs::exists(d / "report" / "roc_late_equal.csv"));
}

TEST_CASE("evaluate: self-neighbour accuracy, mismatch exit and ROC endpoints") {
  auto d = fixtures::scratch("cli_evaluate");
  REQUIRE(run({"train", "--out", d.string(), "--features", (extracted() / "features").string(),
               "--ensemble", "soft_vote", "--no-grid"})
              .code == 0);
  const fs::path train_csv = d / "data" / "train.csv";
  const auto train = monitor::data::load_feature_matrix(train_csv);
  const auto knn = monitor::learn::fit({monitor::learn::ModelKind::kKnn, {{"n_neighbors", 1.0}}, 0}, train);
  monitor::learn::save_model(knn, d / "knn1.json");

  auto eval_dir = d / "eval";
  const Run ok = run({"evaluate", "--out", eval_dir.string(), "--model", (d / "knn1.json").string(),
                      "--matrix", train_csv.string()});
  REQUIRE(ok.code == 0);
  const fs::path metrics = eval_dir / "report" / "metrics.json";
  CHECK(model_accuracy(metrics, read_json(metrics)["models"][0]["model"]) == 1.0);

  std::string roc_file;
  for (const auto& e : fs::directory_iterator(eval_dir / "report"))
    if (e.path().filename().string().rfind("roc_", 0) == 0) roc_file = e.path().string();
  REQUIRE_FALSE(roc_file.empty());
  std::istringstream roc(slurp(roc_file));
  std::vector<std::string> rows;
  for (std::string s; std::getline(roc, s);) rows.push_back(s);
  CHECK(rows.front() == "0,0");
  CHECK(rows.back() == "1,1");

  const std::string dropped = train.column_names().front();
  std::vector<std::string> keep(train.column_names().begin() + 1, train.column_names().end());
  monitor::data::save_feature_matrix(train.select_columns(keep), d / "narrow.csv");
  const Run bad = run({"evaluate", "--out", eval_dir.string(), "--model", (d / "knn1.json").string(),
                       "--matrix", (d / "narrow.csv").string()});
  CHECK(bad.code == 4);
  CHECK(bad.err.find(dropped) != std::string::npos);

  const Run ens = run({"evaluate", "--out", (d / "eval_ens").string(), "--model",
                       (d / "models" / "soft_vote" / "manifest.json").string(), "--matrix",
                       (d / "data" / "test.csv").string()});
  CHECK(ens.code == 0);
}

TEST_CASE("config file values win over flags") {
  auto d = fixtures::scratch("cli_config");
  const fs::path flag_out = d / "from_flag";
  const fs::path cfg_out = d / "from_config";
  std::ofstream(d / "cfg.json") << R"({"out": "from_config", "ensembles": ["soft_vote"], "grid_search": false})";
  const Run r = run({"train", "--config", (d / "cfg.json").string(), "--out", flag_out.string(),
                     "--features", (extracted() / "features").string(), "--ensemble", "stacking"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(cfg_out / "models" / "soft_vote" / "manifest.json"));
  CHECK_FALSE(fs::exists(cfg_out / "models" / "stacking"));
  CHECK_FALSE(fs::exists(flag_out));

  std::ofstream(d / "typo.json") << R"({"seeed": 3})";
  CHECK(run({"train", "--config", (d / "typo.json").string()}).code == 2);
}

TEST_CASE("report subcommand writes summaries") {
  auto d = fixtures::scratch("cli_report");
  REQUIRE(run({"train", "--out", d.string(), "--features", (extracted() / "features").string(),
               "--ensemble", "soft_vote", "--no-grid"})
              .code == 0);
  const Run r = run({"report", "--out", (d / "r").string(), "--matrix", (d / "data" / "train.csv").string(),
                     "--model", (d / "models" / "base" / "rf.json").string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(d / "r" / "report" / "distributions.csv"));
  CHECK(fs::exists(d / "r" / "report" / "importance.csv"));
}
