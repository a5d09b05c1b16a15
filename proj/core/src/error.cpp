#include "monitor/error.hpp"

namespace monitor {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kSingleClass: return "single class";
    case ErrorKind::kFeatureMismatch: return "feature mismatch";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kState: return "state";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace monitor
