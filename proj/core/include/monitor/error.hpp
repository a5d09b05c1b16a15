#pragma once

#include <stdexcept>
#include <string>

namespace monitor {

/// Broad failure categories. The CLI maps these onto stable exit codes.
enum class ErrorKind {
  kInvalidArgument,
  kIo,
  kSchema,          // malformed input file or record
  kSingleClass,     // training data holds one class only
  kFeatureMismatch, // columns differ from what a model was fitted on
  kDegenerate,      // numerically degenerate input (e.g. flat image statistics)
  kState,           // operation called in the wrong order
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace monitor
