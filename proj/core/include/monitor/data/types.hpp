#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace monitor::data {

/// fake is the positive class everywhere: fake = 1, real = 0.
enum class Label : int { kReal = 0, kFake = 1 };

using Labels = std::vector<int>;

inline int to_int(Label l) { return static_cast<int>(l); }
std::optional<Label> parse_label(const std::string& text);
const char* to_string(Label l);

/// Author metadata. Counts that were absent in the source stay empty and are
/// imputed to zero (with a companion flag column) at feature extraction.
struct UserMeta {
  std::optional<std::int64_t> followers;
  std::optional<std::int64_t> friends;
  std::optional<std::int64_t> posts;
  std::optional<std::int64_t> times_listed;
  std::optional<std::int64_t> likes_given;
  bool verified = false;
  bool has_profile_image = false;
  bool has_homepage_url = false;
};

struct MessageRecord {
  std::string id;
  std::string event_id;
  std::string text;
  UserMeta user;
  std::vector<std::filesystem::path> image_paths;  // resolved, existing files only
  std::int64_t retweet_count = 0;
  std::int64_t like_count = 0;
  std::optional<Label> label;
};

enum class DatasetFormat { kJsonl, kCsv };

/// A problem found while loading. Rejected rows are excluded from the
/// dataset; non-rejected issues (such as a missing image) are warnings.
struct LoadIssue {
  std::size_t line = 0;  // 1-based line (jsonl) or data row (csv)
  std::string id;
  std::string reason;
  bool rejected = true;
};

struct Dataset {
  std::vector<MessageRecord> records;
  std::filesystem::path source;
  DatasetFormat format = DatasetFormat::kJsonl;
  std::vector<LoadIssue> issues;

  std::size_t size() const { return records.size(); }
  std::size_t rejected_count() const;
  /// Labels as 0/1; throws if any record is unlabeled.
  Labels labels() const;
  Dataset subset(const std::vector<std::size_t>& indices) const;
};

}  // namespace monitor::data
