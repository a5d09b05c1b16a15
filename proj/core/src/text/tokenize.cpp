#include "monitor/text/tokenize.hpp"

namespace monitor::text {
namespace {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

Decoded decode_one(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (i + len > s.size()) return {0xFFFD, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool is_space(char32_t c) {
  return c == ' ' || (c >= 0x09 && c <= 0x0D) || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000;
}

bool is_letter_or_digit(char32_t c) {
  if (c < 0x80) return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  // Latin-1 letters, Latin Extended, Greek, Cyrillic, CJK ideographs, Hangul.
  return (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7) || (c >= 0x370 && c <= 0x52F) ||
         (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0xAC00 && c <= 0xD7AF);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    auto d = decode_one(s, i);
    out.push_back(d.cp);
    i += d.len;
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  bool in_token = false;
  for (std::size_t i = 0; i < s.size();) {
    auto d = decode_one(s, i);
    if (is_space(d.cp)) {
      if (in_token) tokens.emplace_back(s.substr(start, i - start));
      in_token = false;
    } else if (!in_token) {
      start = i;
      in_token = true;
    }
    i += d.len;
  }
  if (in_token) tokens.emplace_back(s.substr(start));
  return tokens;
}

TokenKind classify_token(std::string_view token) {
  if (starts_with(token, "http://") || starts_with(token, "https://") || starts_with(token, "www."))
    return TokenKind::kUrl;
  if (token.size() > 1 && token[0] == '@') return TokenKind::kMention;
  if (token.size() > 1 && token[0] == '#') return TokenKind::kHashtag;
  return TokenKind::kOther;
}

bool has_word_character(std::string_view token) {
  for (std::size_t i = 0; i < token.size();) {
    auto d = decode_one(token, i);
    if (is_letter_or_digit(d.cp)) return true;
    i += d.len;
  }
  return false;
}

std::string normalize_word(std::string_view token) {
  auto keep = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '\'' || (static_cast<unsigned char>(c) & 0x80);
  };
  std::size_t b = 0, e = token.size();
  while (b < e && (!keep(token[b]) || token[b] == '\'')) ++b;
  while (e > b && (!keep(token[e - 1]) || token[e - 1] == '\'')) --e;
  std::string out(token.substr(b, e - b));
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace monitor::text
