#include "monitor/text/readability.hpp"

#include "monitor/text/tokenize.hpp"

namespace monitor::text {
namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_terminal_mark(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

int count_syllables(std::string_view word) {
  std::string w;
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') w.push_back(c);
  }
  int groups = 0;
  bool prev_vowel = false;
  for (char c : w) {
    const bool v = is_vowel(c);
    if (v && !prev_vowel) ++groups;
    prev_vowel = v;
  }
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && w[n - 2] != 'l') --groups;
  return groups < 1 ? 1 : groups;
}

TextCounts count_text(std::string_view text) {
  TextCounts counts;
  bool segment_has_word = false;
  bool in_marks = false;
  for (const auto& token : split_whitespace(text)) {
    const TokenKind kind = classify_token(token);
    if (kind == TokenKind::kUrl) continue;
    if (kind == TokenKind::kOther && has_word_character(token)) {
      ++counts.words;
      counts.syllables += count_syllables(token);
    }
    for (char c : token) {
      if (is_terminal_mark(c)) {
        if (!in_marks && segment_has_word) {
          ++counts.sentences;
          segment_has_word = false;
        }
        in_marks = true;
        continue;
      }
      in_marks = false;
      if (has_word_character(std::string_view(&c, 1)) ||
          (static_cast<unsigned char>(c) & 0x80)) {
        segment_has_word = segment_has_word || kind == TokenKind::kOther;
      }
    }
    in_marks = false;
  }
  if (segment_has_word) ++counts.sentences;
  return counts;
}

double flesch_reading_ease(const TextCounts& c) {
  if (c.words == 0 || c.sentences == 0) return 0.0;
  const double words = c.words;
  return 206.835 - 1.015 * (words / c.sentences) - 84.6 * (c.syllables / words);
}

double flesch_reading_ease(std::string_view text) { return flesch_reading_ease(count_text(text)); }

}  // namespace monitor::text
