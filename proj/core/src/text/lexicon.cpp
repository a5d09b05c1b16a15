#include "monitor/text/lexicon.hpp"

#include <cstdlib>
#include <fstream>

#include "monitor/error.hpp"

namespace monitor::text {

std::set<std::string> read_token_list(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read resource list " + file.string());
  std::set<std::string> out;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) out.insert(line);
  }
  return out;
}

TextResources TextResources::load(const std::filesystem::path& dir) {
  TextResources r;
  r.positive_words = read_token_list(dir / "positive_words.txt");
  r.negative_words = read_token_list(dir / "negative_words.txt");
  r.happy_emoticons = read_token_list(dir / "happy_emoticons.txt");
  r.sad_emoticons = read_token_list(dir / "sad_emoticons.txt");
  r.first_person = read_token_list(dir / "first_person_pronouns.txt");
  r.second_person = read_token_list(dir / "second_person_pronouns.txt");
  r.third_person = read_token_list(dir / "third_person_pronouns.txt");
  return r;
}

std::filesystem::path TextResources::default_dir() {
  if (const char* env = std::getenv("MONITOR_RESOURCE_DIR"); env && *env) return env;
  return MONITOR_DEFAULT_RESOURCE_DIR;
}

}  // namespace monitor::text
