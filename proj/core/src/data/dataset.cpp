#include "monitor/data/dataset.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "monitor/data/csv.hpp"
#include "monitor/error.hpp"

namespace monitor::data {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t non_negative(std::int64_t v, const char* field) {
  if (v < 0) throw RowError(std::string("negative ") + field);
  return v;
}

std::optional<std::int64_t> json_count(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw RowError(std::string("field '") + key + "' is not an integer");
  return non_negative(it->get<std::int64_t>(), key);
}

bool json_bool(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return false;
  if (!it->is_boolean()) throw RowError(std::string("field '") + key + "' is not a boolean");
  return it->get<bool>();
}

std::string json_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw RowError(std::string("missing '") + key + "'");
  if (!it->is_string()) throw RowError(std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

std::optional<Label> label_field(const std::string& text) {
  if (text.empty() || text == "null") return std::nullopt;
  auto l = parse_label(text);
  if (!l) throw RowError("label must be 'real', 'fake' or null, got '" + text + "'");
  return l;
}

// Keeps image paths that resolve; reports the others as warnings.
void resolve_images(MessageRecord& rec, const std::vector<std::string>& raw, const fs::path& base,
                    std::size_t line, std::vector<LoadIssue>& issues) {
  for (const auto& p : raw) {
    if (p.empty()) continue;
    fs::path candidate(p);
    if (candidate.is_relative()) candidate = base / candidate;
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) {
      rec.image_paths.push_back(candidate.lexically_normal());
    } else {
      issues.push_back({line, rec.id, "image not found: " + p, false});
    }
  }
}

MessageRecord parse_json_record(const json& j, const fs::path& base, std::size_t line,
                                std::vector<LoadIssue>& issues) {
  if (!j.is_object()) throw RowError("record is not a JSON object");
  MessageRecord rec;
  rec.id = json_string(j, "id");
  if (rec.id.empty()) throw RowError("empty 'id'");
  rec.event_id = json_string(j, "event_id");
  rec.text = json_string(j, "text");
  if (auto it = j.find("label"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw RowError("field 'label' is not a string");
    rec.label = label_field(it->get<std::string>());
  }
  rec.retweet_count = json_count(j, "retweet_count").value_or(0);
  rec.like_count = json_count(j, "like_count").value_or(0);
  if (auto it = j.find("user"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw RowError("field 'user' is not an object");
    const json& u = *it;
    rec.user.followers = json_count(u, "followers");
    rec.user.friends = json_count(u, "friends");
    rec.user.posts = json_count(u, "posts");
    rec.user.times_listed = json_count(u, "times_listed");
    rec.user.likes_given = json_count(u, "likes_given");
    rec.user.verified = json_bool(u, "verified");
    rec.user.has_profile_image = json_bool(u, "has_profile_image");
    rec.user.has_homepage_url = json_bool(u, "has_homepage_url");
  }
  std::vector<std::string> raw;
  if (auto it = j.find("image_paths"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw RowError("field 'image_paths' is not an array");
    for (const auto& p : *it) {
      if (!p.is_string()) throw RowError("image path is not a string");
      raw.push_back(p.get<std::string>());
    }
  }
  resolve_images(rec, raw, base, line, issues);
  return rec;
}

std::optional<std::int64_t> csv_count(const std::string& text, const char* field) {
  if (text.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw RowError(std::string("field '") + field + "' is not an integer");
  return non_negative(v, field);
}

bool csv_bool(const std::string& text, const char* field) {
  if (text.empty() || text == "false" || text == "0") return false;
  if (text == "true" || text == "1") return true;
  throw RowError(std::string("field '") + field + "' is not a boolean");
}

void load_jsonl(std::istream& in, const fs::path& base, Dataset& d) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::string id;
    try {
      json j = json::parse(line);
      if (j.is_object() && j.contains("id") && j["id"].is_string()) id = j["id"].get<std::string>();
      d.records.push_back(parse_json_record(j, base, line_no, d.issues));
    } catch (const json::exception& e) {
      d.issues.push_back({line_no, id, std::string("invalid JSON: ") + e.what(), true});
    } catch (const RowError& e) {
      d.issues.push_back({line_no, id, e.what(), true});
    }
  }
}

void load_csv(std::istream& in, const fs::path& base, Dataset& d) {
  auto header = csv::read_record(in);
  if (!header) return;
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header->size(); ++i) col[(*header)[i]] = i;
  for (const char* required : {"id", "event_id", "text"}) {
    if (!col.count(required))
      fail(ErrorKind::kSchema, std::string("csv dataset header lacks '") + required + "'");
  }
  std::size_t row_no = 0;
  while (auto fields = csv::read_record(in)) {
    ++row_no;
    if (fields->size() == 1 && (*fields)[0].empty()) continue;
    std::string id;
    try {
      if (fields->size() != header->size())
        throw RowError("expected " + std::to_string(header->size()) + " fields, got " +
                       std::to_string(fields->size()));
      auto get = [&](const char* name) -> std::string {
        auto it = col.find(name);
        return it == col.end() ? std::string() : (*fields)[it->second];
      };
      MessageRecord rec;
      rec.id = id = get("id");
      if (rec.id.empty()) throw RowError("empty 'id'");
      rec.event_id = get("event_id");
      rec.text = get("text");
      rec.label = label_field(get("label"));
      rec.retweet_count = csv_count(get("retweet_count"), "retweet_count").value_or(0);
      rec.like_count = csv_count(get("like_count"), "like_count").value_or(0);
      rec.user.followers = csv_count(get("followers"), "followers");
      rec.user.friends = csv_count(get("friends"), "friends");
      rec.user.posts = csv_count(get("posts"), "posts");
      rec.user.times_listed = csv_count(get("times_listed"), "times_listed");
      rec.user.likes_given = csv_count(get("likes_given"), "likes_given");
      rec.user.verified = csv_bool(get("verified"), "verified");
      rec.user.has_profile_image = csv_bool(get("has_profile_image"), "has_profile_image");
      rec.user.has_homepage_url = csv_bool(get("has_homepage_url"), "has_homepage_url");
      std::vector<std::string> raw;
      std::stringstream paths(get("image_paths"));
      for (std::string p; std::getline(paths, p, ';');) raw.push_back(p);
      resolve_images(rec, raw, base, row_no, d.issues);
      d.records.push_back(std::move(rec));
    } catch (const RowError& e) {
      d.issues.push_back({row_no, id, e.what(), true});
    }
  }
}

}  // namespace

std::optional<Label> parse_label(const std::string& text) {
  if (text == "fake" || text == "1") return Label::kFake;
  if (text == "real" || text == "0") return Label::kReal;
  return std::nullopt;
}

const char* to_string(Label l) { return l == Label::kFake ? "fake" : "real"; }

std::size_t Dataset::rejected_count() const {
  std::size_t n = 0;
  for (const auto& i : issues) n += i.rejected ? 1 : 0;
  return n;
}

Labels Dataset::labels() const {
  Labels out;
  out.reserve(records.size());
  for (const auto& r : records) {
    require(r.label.has_value(), ErrorKind::kSchema, "record '" + r.id + "' has no label");
    out.push_back(to_int(*r.label));
  }
  return out;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  Dataset out;
  out.source = source;
  out.format = format;
  out.records.reserve(indices.size());
  for (auto i : indices) out.records.push_back(records.at(i));
  return out;
}

DatasetFormat format_from_path(const fs::path& path) {
  return path.extension() == ".csv" ? DatasetFormat::kCsv : DatasetFormat::kJsonl;
}

DatasetFormat parse_format(const std::string& name) {
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "csv") return DatasetFormat::kCsv;
  fail(ErrorKind::kInvalidArgument, "unknown dataset format '" + name + "'");
}

Dataset load_dataset(const fs::path& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read dataset " + path.string());
  Dataset d;
  d.source = path;
  d.format = format;
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (format == DatasetFormat::kJsonl) {
    load_jsonl(in, base, d);
  } else {
    load_csv(in, base, d);
  }
  require(!d.records.empty(), ErrorKind::kSchema, "zero valid records in " + path.string());
  std::unordered_set<std::string> seen;
  for (const auto& r : d.records) {
    require(seen.insert(r.id).second, ErrorKind::kSchema, "duplicate id '" + r.id + "'");
  }
  return d;
}

FilterOutcome filter_records(const Dataset& d, bool require_image) {
  FilterOutcome out;
  out.kept.source = d.source;
  out.kept.format = d.format;
  out.kept.issues = d.issues;
  for (const auto& r : d.records) {
    const bool has_image = !r.image_paths.empty();
    const bool has_text = r.text.find_first_not_of(" \t\r\n") != std::string::npos;
    const bool keep = require_image ? has_image : (has_image || has_text);
    if (keep) {
      out.kept.records.push_back(r);
    } else {
      out.excluded_ids.push_back(r.id);
    }
  }
  return out;
}

}  // namespace monitor::data
