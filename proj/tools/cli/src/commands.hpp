#pragma once

#include <filesystem>
#include <ostream>

#include "monitor_cli/config.hpp"

namespace monitor::cli {

/// Paths a subcommand reads besides the config.
struct CommandPaths {
  std::filesystem::path features;  // extract output dir; default <out>/features
  std::filesystem::path model;     // model file, ensemble manifest or late-fusion file
  std::filesystem::path matrix;    // feature matrix CSV
};

void cmd_extract(const PipelineConfig& c, std::ostream& out);
void cmd_select(const PipelineConfig& c, const CommandPaths& p, std::ostream& out);
void cmd_train(const PipelineConfig& c, const CommandPaths& p, std::ostream& out);
void cmd_evaluate(const PipelineConfig& c, const CommandPaths& p, std::ostream& out);
void cmd_report(const PipelineConfig& c, const CommandPaths& p, std::ostream& out);
void cmd_fit_iqa(const PipelineConfig& c, std::ostream& out);

}  // namespace monitor::cli
