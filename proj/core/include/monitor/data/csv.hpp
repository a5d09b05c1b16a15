#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monitor::data::csv {

/// Reads one RFC 4180 record (quoted fields may span lines). Returns nullopt at EOF.
std::optional<std::vector<std::string>> read_record(std::istream& in);

/// Quotes a field only when it contains a separator, quote or newline.
std::string escape(std::string_view field);

}  // namespace monitor::data::csv
