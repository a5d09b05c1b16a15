#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "monitor/data/types.hpp"

namespace monitor::data {

/// Reads a message dataset. Malformed rows are recorded in Dataset::issues
/// rather than dropped silently; image paths are resolved relative to the
/// dataset file and unresolvable ones are removed from the record with a
/// warning. Throws on an unreadable file, zero valid records or duplicate ids.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);

DatasetFormat format_from_path(const std::filesystem::path& path);
DatasetFormat parse_format(const std::string& name);

struct FilterOutcome {
  Dataset kept;
  std::vector<std::string> excluded_ids;
};

/// Default: drops records with neither text nor image. With require_image,
/// drops every record without an image.
FilterOutcome filter_records(const Dataset& d, bool require_image);

}  // namespace monitor::data
