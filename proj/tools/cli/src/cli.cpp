#include "monitor_cli/cli.hpp"

#include <functional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "monitor/error.hpp"
#include "monitor_cli/config.hpp"

namespace monitor::cli {
namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidArgument: return kUsage;
    case ErrorKind::kIo:
    case ErrorKind::kSchema: return kSchemaFailure;
    case ErrorKind::kSingleClass: return kSingleClass;
    case ErrorKind::kFeatureMismatch: return kFeatureMismatch;
    case ErrorKind::kDegenerate:
    case ErrorKind::kState: return kInternal;
  }
  return kInternal;
}

// Flag values are applied only when given, so the config file can sit on top.
struct Flags {
  std::string config, dataset, format, out, resources, pristine, iqa_models, fusion, split_mode;
  std::vector<std::string> ensembles;
  std::uint64_t seed = 0;
  double test_fraction = 0.0;
  int top_k = 0;
  bool require_image = false, no_grid = false;
  CommandPaths paths;
  std::vector<std::pair<CLI::Option*, std::function<void(PipelineConfig&)>>> setters;

  template <typename T>
  CLI::Option* bind(CLI::App* app, const std::string& name, T& target, const std::string& help,
                    std::function<void(PipelineConfig&)> apply) {
    CLI::Option* opt = app->add_option(name, target, help);
    setters.emplace_back(opt, std::move(apply));
    return opt;
  }
  void bind_flag(CLI::App* app, const std::string& name, bool& target, const std::string& help,
                 std::function<void(PipelineConfig&)> apply) {
    setters.emplace_back(app->add_flag(name, target, help), std::move(apply));
  }
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON config file; its values win over flags");
  f.bind(app, "--seed", f.seed, "random seed", [&f](PipelineConfig& c) { c.seed = f.seed; });
  f.bind(app, "--out", f.out, "output directory", [&f](PipelineConfig& c) { c.out = f.out; });
}

void add_pipeline(CLI::App* app, Flags& f) {
  f.bind(app, "--dataset", f.dataset, "messages file (jsonl or csv)",
         [&f](PipelineConfig& c) { c.dataset = f.dataset; });
  f.bind(app, "--format", f.format, "jsonl or csv (default: from extension)",
         [&f](PipelineConfig& c) { c.format = f.format; });
  f.bind(app, "--resources", f.resources, "directory of text word lists",
         [&f](PipelineConfig& c) { c.resources = f.resources; });
  f.bind(app, "--pristine", f.pristine, "pristine image directory for IQA models",
         [&f](PipelineConfig& c) { c.pristine_dir = f.pristine; });
  f.bind(app, "--iqa-models", f.iqa_models, "directory with brisque.json and niqe.json",
         [&f](PipelineConfig& c) { c.iqa_models = f.iqa_models; });
  f.bind_flag(app, "--require-image", f.require_image, "drop messages without an image",
              [&f](PipelineConfig& c) { c.require_image = f.require_image; });
}

void add_training(CLI::App* app, Flags& f) {
  app->add_option("--features", f.paths.features, "directory written by extract");
  f.bind(app, "--fusion", f.fusion, "early, late_equal or late_optimized",
         [&f](PipelineConfig& c) { c.fusion = f.fusion; });
  f.bind(app, "--ensemble", f.ensembles, "ensembles to fit (repeatable)",
         [&f](PipelineConfig& c) { c.ensembles = f.ensembles; })
      ->delimiter(',');
  f.bind(app, "--test-fraction", f.test_fraction, "held-out share of rows",
         [&f](PipelineConfig& c) { c.test_fraction = f.test_fraction; });
  f.bind(app, "--split-mode", f.split_mode, "message or event",
         [&f](PipelineConfig& c) { c.split_mode = f.split_mode; });
  f.bind(app, "--top-k", f.top_k, "textual features kept by selection",
         [&f](PipelineConfig& c) { c.top_k = f.top_k; });
  f.bind_flag(app, "--no-grid", f.no_grid, "use default hyperparameters",
              [&f](PipelineConfig& c) { c.grid_search = !f.no_grid; });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multimodal rumor verification pipeline"};
  app.require_subcommand(1);
  Flags f;

  auto* extract = app.add_subcommand("extract", "extract textual and visual feature matrices");
  add_common(extract, f);
  add_pipeline(extract, f);

  auto* select = app.add_subcommand("select", "rank textual features by gain ratio");
  add_common(select, f);
  select->add_option("--features", f.paths.features, "directory written by extract");
  f.bind(select, "--top-k", f.top_k, "textual features kept",
         [&f](PipelineConfig& c) { c.top_k = f.top_k; });

  auto* train = app.add_subcommand("train", "select, fuse, train, ensemble and evaluate");
  add_common(train, f);
  add_training(train, f);

  auto* evaluate = app.add_subcommand("evaluate", "score a saved model on a feature matrix");
  add_common(evaluate, f);
  evaluate->add_option("--model", f.paths.model, "model file, ensemble manifest or late.json")
      ->required();
  evaluate->add_option("--matrix", f.paths.matrix, "labeled feature matrix CSV")->required();

  auto* report = app.add_subcommand("report", "class-conditional summaries and importances");
  add_common(report, f);
  report->add_option("--matrix", f.paths.matrix, "labeled feature matrix CSV")->required();
  report->add_option("--model", f.paths.model, "random forest model for importances");

  auto* fit_iqa = app.add_subcommand("fit-iqa", "fit BRISQUE and NIQE pristine models");
  add_common(fit_iqa, f);
  f.bind(fit_iqa, "--pristine", f.pristine, "pristine image directory",
         [&f](PipelineConfig& c) { c.pristine_dir = f.pristine; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    PipelineConfig c;
    for (const auto& [opt, apply] : f.setters)
      if (opt->count() > 0) apply(c);
    if (!f.config.empty()) apply_config_file(c, f.config);
    validate(c);

    if (*extract) cmd_extract(c, out);
    else if (*select) cmd_select(c, f.paths, out);
    else if (*train) cmd_train(c, f.paths, out);
    else if (*evaluate) cmd_evaluate(c, f.paths, out);
    else if (*report) cmd_report(c, f.paths, out);
    else if (*fit_iqa) cmd_fit_iqa(c, out);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace monitor::cli
