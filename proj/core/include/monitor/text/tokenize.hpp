#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monitor::text {

/// Decodes UTF-8 into code points; invalid bytes decode as U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view s);

/// Splits on Unicode whitespace.
std::vector<std::string> split_whitespace(std::string_view s);

enum class TokenKind { kUrl, kMention, kHashtag, kOther };

/// URLs start with "http://", "https://" or "www."; mentions and hashtags are
/// "@" / "#" followed by at least one more character.
TokenKind classify_token(std::string_view token);

/// True when the token holds at least one letter or digit.
bool has_word_character(std::string_view token);

/// ASCII-lowercases and strips leading/trailing characters that are not
/// letters, digits or apostrophes.
std::string normalize_word(std::string_view token);

}  // namespace monitor::text
