#pragma once

#include <filesystem>
#include <set>
#include <string>

namespace monitor::text {

/// Word lists consulted by the content feature extractor. Read-only after
/// loading, so one instance can be shared by concurrent extractions.
struct TextResources {
  std::set<std::string> positive_words;
  std::set<std::string> negative_words;
  std::set<std::string> happy_emoticons;
  std::set<std::string> sad_emoticons;
  std::set<std::string> first_person;
  std::set<std::string> second_person;
  std::set<std::string> third_person;

  /// Loads the seven list files (see resources/README.md) from `dir`.
  static TextResources load(const std::filesystem::path& dir);
  /// The directory shipped with the library.
  static std::filesystem::path default_dir();
  static TextResources load_default() { return load(default_dir()); }
};

std::set<std::string> read_token_list(const std::filesystem::path& file);

}  // namespace monitor::text
