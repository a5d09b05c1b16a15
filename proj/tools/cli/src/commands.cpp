#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "monitor/data/dataset.hpp"
#include "monitor/data/split.hpp"
#include "monitor/ensemble/ensemble.hpp"
#include "monitor/error.hpp"
#include "monitor/fusion/early.hpp"
#include "monitor/fusion/late.hpp"
#include "monitor/learn/cv.hpp"
#include "monitor/learn/grid.hpp"
#include "monitor/report/writer.hpp"
#include "monitor/selection/gain_ratio.hpp"
#include "monitor/text/features.hpp"
#include "monitor/vision/extract.hpp"

namespace monitor::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Progress goes to stdout without timestamps; run.log gets the same lines
// stamped, so every other output file stays byte-stable across runs.
class Log {
 public:
  Log(const fs::path& out_dir, std::ostream& out) : out_(out) {
    fs::create_directories(out_dir);
    file_.open(out_dir / "run.log", std::ios::app);
  }
  void operator()(const std::string& line) {
    out_ << line << '\n';
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    file_ << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << ' ' << line << '\n';
  }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

fs::path features_dir(const PipelineConfig& c, const CommandPaths& p) {
  return p.features.empty() ? c.out / "features" : p.features;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path.string());
  out << text;
}

vision::IqaModels iqa_models(const PipelineConfig& c, Log& log) {
  if (!c.iqa_models.empty()) {
    log("loading IQA models from " + c.iqa_models.string());
    return {vision::load_iqa_model(c.iqa_models / "brisque.json"),
            vision::load_iqa_model(c.iqa_models / "niqe.json")};
  }
  const fs::path dir = c.pristine_dir.empty() ? fs::path(MONITOR_DEFAULT_PRISTINE_DIR)
                                              : c.pristine_dir;
  log("fitting IQA models on " + dir.filename().string());
  return vision::IqaModels::fit_from_directory(dir);
}

report::ModelEvaluation evaluate(const std::string& name, const std::vector<double>& positive,
                                 const data::Labels& predicted, const data::Labels& truth) {
  report::ModelEvaluation e;
  e.name = name;
  e.rows = truth.size();
  e.metrics = report::classification_metrics(truth, predicted);
  bool both = false;
  for (int l : truth) both |= l != truth.front();
  if (both) e.roc = report::roc_curve(truth, positive);
  return e;
}

std::vector<std::string> column_subset(const data::FeatureMatrix& m, data::Modality mod) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.modalities()[c] == mod) out.push_back(m.column_names()[c]);
  return out;
}

// Rows of the train/test split, either per message or per event.
data::IndexSplit split_rows(const PipelineConfig& c, const data::FeatureMatrix& m,
                            const fs::path& features) {
  if (c.split_mode == "message")
    return data::split_indices(m.labels(), c.test_fraction, c.stratified, c.seed);
  data::Dataset d;
  std::map<std::string, std::string> event_of;
  std::ifstream in(features / "events.csv", std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "event split needs events.csv from extract");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    require(comma != std::string::npos, ErrorKind::kSchema, "malformed events.csv");
    event_of[line.substr(0, comma)] = line.substr(comma + 1);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    data::MessageRecord rec;
    rec.id = m.row_ids()[r];
    require(event_of.count(rec.id) != 0, ErrorKind::kSchema, "no event for row " + rec.id);
    rec.event_id = event_of[rec.id];
    rec.label = static_cast<data::Label>(m.labels()[r]);
    d.records.push_back(std::move(rec));
  }
  const auto [train, test] =
      data::split_train_test(d, c.test_fraction, c.stratified, c.seed, data::SplitMode::kEvent);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t r = 0; r < m.rows(); ++r) row_of[m.row_ids()[r]] = r;
  data::IndexSplit s;
  for (const auto& rec : train.records) s.train.push_back(row_of[rec.id]);
  for (const auto& rec : test.records) s.test.push_back(row_of[rec.id]);
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

json late_json(const fusion::LateFusionEnsemble& e) {
  json j;
  j["format"] = "monitor.late_fusion";
  j["version"] = 1;
  j["mode"] = fusion::to_string(e.combiner.mode);
  j["text_model"] = "text_rf.json";
  j["visual_model"] = "visual_rf.json";
  if (e.combiner.combiner) {
    const auto& m = *e.combiner.combiner;
    j["combiner"] = {{"coef", std::vector<double>(m.coef.data(), m.coef.data() + m.coef.size())},
                     {"intercept", m.intercept}};
  } else {
    j["combiner"] = nullptr;
  }
  return j;
}

fusion::LateFusionEnsemble late_from(const fs::path& path, const json& j) {
  fusion::LateFusionEnsemble e;
  const auto dir = path.parent_path();
  e.text_model = learn::load_model(dir / j.at("text_model").get<std::string>());
  e.visual_model = learn::load_model(dir / j.at("visual_model").get<std::string>());
  if (j.at("mode").get<std::string>() == "optimized") {
    e.combiner.mode = fusion::LateMode::kOptimized;
    learn::LogisticModel m;
    const auto coef = j.at("combiner").at("coef").get<std::vector<double>>();
    m.coef = Eigen::Map<const Eigen::VectorXd>(coef.data(), static_cast<Eigen::Index>(coef.size()));
    m.intercept = j.at("combiner").at("intercept").get<double>();
    e.combiner.combiner = m;
  }
  return e;
}

// Any of the three model file kinds, predicted on x.
struct LoadedModel {
  std::string name;
  std::vector<double> positive;
  data::Labels labels;
  std::vector<report::ImportanceEntry> importance;
};

LoadedModel predict_any(const fs::path& path, const data::FeatureMatrix& x) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kSchema, "malformed model file " + path.string() + ": " + e.what());
  }
  require(j.is_object() && j.contains("format"), ErrorKind::kSchema,
          path.string() + " is not a model file");
  const std::string format = j.at("format").get<std::string>();
  LoadedModel out;
  if (format == "monitor.ensemble") {
    const auto e = ensemble::load_ensemble(path);
    out.name = ensemble::to_string(e.kind);
    const auto p = ensemble::ensemble_predict(e, x);
    out.positive = p.positive;
    out.labels = p.labels;
    for (const auto& b : e.base)
      if (b.spec.kind == learn::ModelKind::kRf) out.importance = report::feature_importance(b);
  } else if (format == "monitor.late_fusion") {
    const auto e = late_from(path, j);
    out.name = "late_" + j.at("mode").get<std::string>();
    out.positive = e.predict(x.select_columns(e.text_model.feature_names),
                             x.select_columns(e.visual_model.feature_names));
    out.labels = learn::threshold_labels(out.positive);
  } else {
    const auto m = learn::model_from_json(text);
    out.name = learn::to_string(m.spec.kind);
    out.positive = learn::predict_positive(m, x);
    out.labels = learn::threshold_labels(out.positive);
    if (m.spec.kind == learn::ModelKind::kRf) out.importance = report::feature_importance(m);
  }
  return out;
}

}  // namespace

void cmd_extract(const PipelineConfig& c, std::ostream& out) {
  require(!c.dataset.empty(), ErrorKind::kInvalidArgument, "extract needs --dataset");
  Log log(c.out, out);
  const auto format = c.format.empty() ? data::format_from_path(c.dataset)
                                       : data::parse_format(c.format);
  const data::Dataset loaded = data::load_dataset(c.dataset, format);
  log("loaded " + std::to_string(loaded.size()) + " records, " +
      std::to_string(loaded.rejected_count()) + " rejected");
  for (const auto& issue : loaded.issues)
    log(std::string(issue.rejected ? "rejected" : "warning") + " line " +
        std::to_string(issue.line) + (issue.id.empty() ? "" : " (" + issue.id + ")") + ": " +
        issue.reason);

  const auto filtered = data::filter_records(loaded, c.require_image);
  log("excluded " + std::to_string(filtered.excluded_ids.size()) + " records" +
      (c.require_image ? " without an image" : " without text or image"));
  const data::Dataset& d = filtered.kept;
  require(d.size() > 0, ErrorKind::kSchema, "no records left after filtering");

  const text::TextResources res = c.resources.empty() ? text::TextResources::load_default()
                                                      : text::TextResources::load(c.resources);
  const vision::IqaModels models = iqa_models(c, log);
  const fs::path dir = c.out / "features";
  fs::create_directories(dir);
  if (c.iqa_models.empty()) {
    fs::create_directories(c.out / "iqa");
    vision::save_iqa_model(models.brisque, c.out / "iqa" / "brisque.json");
    vision::save_iqa_model(models.niqe, c.out / "iqa" / "niqe.json");
  }

  const data::FeatureMatrix textual = text::extract_textual_matrix(d, res);
  const data::FeatureMatrix visual = vision::extract_visual_matrix(d, models);
  data::save_feature_matrix(textual, dir / "textual.csv");
  data::save_feature_matrix(visual, dir / "visual.csv");

  std::ostringstream events;
  events << "id,event_id\n";
  for (const auto& r : d.records) events << r.id << ',' << r.event_id << '\n';
  write_file(dir / "events.csv", events.str());
  std::ostringstream excluded;
  for (const auto& id : filtered.excluded_ids) excluded << id << '\n';
  write_file(dir / "excluded.txt", excluded.str());

  log("textual columns: " + std::to_string(textual.cols()));
  log("visual columns: " + std::to_string(visual.cols()));
  log("rows: " + std::to_string(textual.rows()));
}

void cmd_fit_iqa(const PipelineConfig& c, std::ostream& out) {
  Log log(c.out, out);
  PipelineConfig fresh = c;
  fresh.iqa_models.clear();
  const vision::IqaModels models = iqa_models(fresh, log);
  fs::create_directories(c.out / "iqa");
  vision::save_iqa_model(models.brisque, c.out / "iqa" / "brisque.json");
  vision::save_iqa_model(models.niqe, c.out / "iqa" / "niqe.json");
  log("wrote " + (c.out / "iqa").string());
}

void cmd_select(const PipelineConfig& c, const CommandPaths& p, std::ostream& out) {
  Log log(c.out, out);
  const auto textual = data::load_feature_matrix(features_dir(c, p) / "textual.csv");
  const auto ranking = selection::select_features(textual, c.selection_threshold, c.top_k);
  const fs::path dir = c.out / "selection";
  fs::create_directories(dir);
  selection::save_ranking(ranking, dir / "ranking.csv");
  std::ostringstream sel;
  for (const auto& s : ranking.selected) sel << s << '\n';
  write_file(dir / "selected.txt", sel.str());
  log("selected " + std::to_string(ranking.selected.size()) + " of " +
      std::to_string(ranking.entries.size()) + " textual features");
}

void cmd_train(const PipelineConfig& c, const CommandPaths& p, std::ostream& out) {
  Log log(c.out, out);
  const fs::path fdir = features_dir(c, p);
  const auto textual_all = data::load_feature_matrix(fdir / "textual.csv");
  const auto visual_all = data::load_feature_matrix(fdir / "visual.csv");
  require(textual_all.has_labels(), ErrorKind::kSchema, "training features carry no labels");
  learn::require_binary_labels(textual_all.labels(), textual_all.rows());

  const data::IndexSplit split = split_rows(c, textual_all, fdir);
  const auto text_train = textual_all.select_rows(split.train);
  const auto text_test = textual_all.select_rows(split.test);
  const auto vis_train = visual_all.select_rows(split.train);
  const auto vis_test = visual_all.select_rows(split.test);
  const data::Labels& y = text_train.labels();
  learn::require_binary_labels(y, text_train.rows());
  log("split: " + std::to_string(split.train.size()) + " train, " +
      std::to_string(split.test.size()) + " test");

  // Feature selection sees training rows only.
  auto ranking = selection::select_features(text_train, c.selection_threshold, c.top_k);
  std::vector<std::string> selected = ranking.selected;
  if (selected.empty()) {
    selected = textual_all.column_names();
    log("no textual feature has gain ratio above the threshold; keeping all");
  }
  fs::create_directories(c.out / "selection");
  selection::save_ranking(ranking, c.out / "selection" / "ranking.csv");
  log("selected " + std::to_string(ranking.selected.size()) + " textual features");

  const auto train = fusion::early_fuse(text_train.select_columns(selected), vis_train);
  const auto test = fusion::early_fuse(text_test.select_columns(selected), vis_test);
  fs::create_directories(c.out / "data");
  data::save_feature_matrix(train, c.out / "data" / "train.csv");
  data::save_feature_matrix(test, c.out / "data" / "test.csv");
  log("fused columns: " + std::to_string(train.cols()));

  report::EvaluationReport rep;
  std::vector<learn::ClassifierSpec> specs;
  json chosen = json::object();
  for (auto kind : {learn::ModelKind::kCart, learn::ModelKind::kKnn, learn::ModelKind::kSvm,
                    learn::ModelKind::kRf}) {
    learn::ClassifierSpec spec = learn::default_spec(kind, c.seed);
    if (c.grid_search) {
      const auto g = learn::grid_search(kind, train, y, c.grid_folds, c.seed);
      spec = g.best;
      log("grid " + std::string(learn::to_string(kind)) + ": " + spec.describe() + " cv accuracy " +
          data::format_double(g.best_score));
    }
    specs.push_back(spec);
    chosen[learn::to_string(kind)] = spec.describe();
    const auto cv = learn::cross_validate(spec, train, y, c.grid_folds, 1, c.seed);
    for (std::size_t f = 0; f < cv.fold_accuracy.size(); ++f)
      rep.folds.push_back({learn::to_string(kind), 0, static_cast<int>(f), cv.fold_accuracy[f]});
  }
  write_file(c.out / "models" / "specs.json", chosen.dump(1) + "\n");

  const fs::path mdir = c.out / "models";
  fs::create_directories(mdir / "base");
  for (const auto& spec : specs) {
    const auto model = learn::fit(spec, train, y);
    const std::string name = learn::to_string(spec.kind);
    learn::save_model(model, mdir / "base" / (name + ".json"));
    const auto pos = learn::predict_positive(model, test);
    rep.models.push_back(evaluate(name, pos, learn::threshold_labels(pos), test.labels()));
    if (spec.kind == learn::ModelKind::kRf) rep.importance = report::feature_importance(model);
  }

  ensemble::Protocol protocol;
  protocol.k = c.k;
  protocol.repeats = c.repeats;
  protocol.test_fraction = c.blend_test_fraction;
  protocol.val_fraction = c.blend_val_fraction;
  protocol.seed = c.seed;
  for (const auto& name : c.ensembles) {
    const auto kind = ensemble::parse_ensemble_kind(name);
    const auto e = ensemble::fit_ensemble(kind, specs, train, y, protocol);
    ensemble::save_ensemble(e, mdir / name);
    const auto pred = ensemble::ensemble_predict(e, test);
    rep.models.push_back(evaluate(name, pred.positive, pred.labels, test.labels()));
    for (std::size_t f = 0; f < e.meta_cv_accuracy.size(); ++f)
      rep.folds.push_back({name + "_meta", 0, static_cast<int>(f), e.meta_cv_accuracy[f]});
    log("ensemble " + name + ": test accuracy " +
        data::format_double(rep.models.back().metrics.accuracy));
  }

  if (c.fusion != "early") {
    const auto mode = c.fusion == "late_equal" ? fusion::LateMode::kEqual
                                               : fusion::LateMode::kOptimized;
    const auto& rf_spec = specs.back();
    const auto tcols = column_subset(train, data::Modality::kTextual);
    const auto vcols = column_subset(train, data::Modality::kVisual);
    const auto late = fusion::fit_late_fusion(mode, rf_spec, train.select_columns(tcols),
                                              train.select_columns(vcols), y, c.grid_folds, c.seed);
    fs::create_directories(mdir / "late");
    learn::save_model(late.text_model, mdir / "late" / "text_rf.json");
    learn::save_model(late.visual_model, mdir / "late" / "visual_rf.json");
    write_file(mdir / "late" / "late.json", late_json(late).dump(1) + "\n");
    const auto pos = late.predict(test.select_columns(tcols), test.select_columns(vcols));
    rep.models.push_back(
        evaluate(c.fusion, pos, learn::threshold_labels(pos), test.labels()));
    log("late fusion " + c.fusion + ": test accuracy " +
        data::format_double(rep.models.back().metrics.accuracy));
  }

  rep.distributions = report::class_distribution_summary(train);
  report::write_report(rep, c.out / "report");
  log("wrote report for " + std::to_string(rep.models.size()) + " models");
}

void cmd_evaluate(const PipelineConfig& c, const CommandPaths& p, std::ostream& out) {
  require(!p.model.empty() && !p.matrix.empty(), ErrorKind::kInvalidArgument,
          "evaluate needs --model and --matrix");
  Log log(c.out, out);
  const auto x = data::load_feature_matrix(p.matrix);
  require(x.has_labels(), ErrorKind::kSchema, "evaluation matrix carries no labels");
  const LoadedModel m = predict_any(p.model, x);
  report::EvaluationReport rep;
  rep.models.push_back(evaluate(m.name, m.positive, m.labels, x.labels()));
  rep.importance = m.importance;
  report::write_report(rep, c.out / "report");
  log(m.name + ": accuracy " + data::format_double(rep.models.back().metrics.accuracy));
}

void cmd_report(const PipelineConfig& c, const CommandPaths& p, std::ostream& out) {
  require(!p.matrix.empty(), ErrorKind::kInvalidArgument, "report needs --matrix");
  Log log(c.out, out);
  const auto x = data::load_feature_matrix(p.matrix);
  report::EvaluationReport rep;
  rep.distributions = report::class_distribution_summary(x);
  if (!p.model.empty()) {
    const auto m = learn::load_model(p.model);
    rep.importance = report::feature_importance(m);
  }
  report::write_report(rep, c.out / "report");
  log("wrote distributions for " + std::to_string(x.cols()) + " features");
}

}  // namespace monitor::cli
