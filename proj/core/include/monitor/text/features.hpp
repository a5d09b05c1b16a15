#pragma once

#include <array>
#include <string_view>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/data/types.hpp"
#include "monitor/text/lexicon.hpp"

namespace monitor::text {

struct ContentFeatures {
  int n_chars = 0;
  int n_words = 0;
  int n_question = 0;
  int n_exclaim = 0;
  int n_upper_chars = 0;
  int n_pos_words = 0;
  int n_neg_words = 0;
  int n_mentions = 0;
  int n_hashtags = 0;
  int n_urls = 0;
  int n_happy_emoticons = 0;
  int n_sad_emoticons = 0;
  int n_first_pron = 0;
  int n_second_pron = 0;
  int n_third_pron = 0;
  double readability = 0.0;

  static constexpr std::size_t kCount = 16;
  static std::array<std::string_view, kCount> names();
  std::array<double, kCount> values() const;
  friend bool operator==(const ContentFeatures&, const ContentFeatures&) = default;
};

struct SocialFeatures {
  std::int64_t followers = 0;
  std::int64_t friends = 0;
  std::int64_t posts = 0;
  std::int64_t times_listed = 0;
  std::int64_t likes_given = 0;
  std::int64_t retweets = 0;
  std::int64_t likes = 0;
  double friends_followers_ratio = 0.0;  // friends / max(followers, 1)
  int verified = 0;
  int has_profile_image = 0;
  int has_homepage_url = 0;
  // Imputation flags for absent user counts (the count itself is imputed to 0).
  int followers_missing = 0;
  int friends_missing = 0;
  int posts_missing = 0;
  int times_listed_missing = 0;
  int likes_given_missing = 0;

  static constexpr std::size_t kCount = 16;
  static std::array<std::string_view, kCount> names();
  std::array<double, kCount> values() const;
  friend bool operator==(const SocialFeatures&, const SocialFeatures&) = default;
};

/// Table of counters over the message text. Empty text yields all zeros.
ContentFeatures extract_content_features(const data::MessageRecord& m, const TextResources& res);
ContentFeatures extract_content_features(std::string_view text, const TextResources& res);

SocialFeatures extract_social_features(const data::MessageRecord& m);

/// Content block followed by the social block, one row per record, all
/// columns tagged textual.
data::FeatureMatrix extract_textual_matrix(const data::Dataset& d, const TextResources& res);

}  // namespace monitor::text
