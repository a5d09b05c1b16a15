#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monitor::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,           // bad flags or argument values
  kSchemaFailure = 2,   // input missing, unreadable or malformed
  kSingleClass = 3,     // training data holds one class
  kFeatureMismatch = 4, // matrix columns differ from the model's
  kInternal = 5,        // numerically degenerate input or other failure
};

/// Runs one invocation, e.g. {"extract", "--dataset", "d.jsonl"}. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monitor::cli
