#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace monitor::text {

/// Vowel-group syllable heuristic over ASCII letters: count maximal runs of
/// a/e/i/o/u/y, drop one for a terminal silent "e" (but not "-le"), floor at 1.
int count_syllables(std::string_view word);

struct TextCounts {
  int words = 0;
  int sentences = 0;
  int syllables = 0;
};

/// Words are whitespace tokens with a letter or digit that are not URLs,
/// mentions or hashtags. A sentence is a span containing at least one word
/// closed by a maximal run of '.', '!' or '?' or by the end of the text.
TextCounts count_text(std::string_view text);

/// 206.835 - 1.015 (words/sentences) - 84.6 (syllables/words); 0 when the
/// text has no word.
double flesch_reading_ease(std::string_view text);
double flesch_reading_ease(const TextCounts& counts);

}  // namespace monitor::text
