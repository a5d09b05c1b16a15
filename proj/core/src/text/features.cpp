#include "monitor/text/features.hpp"

#include <algorithm>

#include "monitor/text/readability.hpp"
#include "monitor/text/tokenize.hpp"

namespace monitor::text {

std::array<std::string_view, ContentFeatures::kCount> ContentFeatures::names() {
  return {"n_chars",          "n_words",         "n_question",     "n_exclaim",
          "n_upper_chars",    "n_pos_words",     "n_neg_words",    "n_mentions",
          "n_hashtags",       "n_urls",          "n_happy_emoticons", "n_sad_emoticons",
          "n_first_pron",     "n_second_pron",   "n_third_pron",   "readability"};
}

std::array<double, ContentFeatures::kCount> ContentFeatures::values() const {
  return {double(n_chars),       double(n_words),         double(n_question),
          double(n_exclaim),     double(n_upper_chars),   double(n_pos_words),
          double(n_neg_words),   double(n_mentions),      double(n_hashtags),
          double(n_urls),        double(n_happy_emoticons), double(n_sad_emoticons),
          double(n_first_pron),  double(n_second_pron),   double(n_third_pron),
          readability};
}

std::array<std::string_view, SocialFeatures::kCount> SocialFeatures::names() {
  return {"followers",         "friends",           "posts",
          "times_listed",      "likes_given",       "retweets",
          "likes",             "friends_followers_ratio", "verified",
          "has_profile_image", "has_homepage_url",  "followers_missing",
          "friends_missing",   "posts_missing",     "times_listed_missing",
          "likes_given_missing"};
}

std::array<double, SocialFeatures::kCount> SocialFeatures::values() const {
  return {double(followers),         double(friends),           double(posts),
          double(times_listed),      double(likes_given),       double(retweets),
          double(likes),             friends_followers_ratio,   double(verified),
          double(has_profile_image), double(has_homepage_url),  double(followers_missing),
          double(friends_missing),   double(posts_missing),     double(times_listed_missing),
          double(likes_given_missing)};
}

ContentFeatures extract_content_features(std::string_view text, const TextResources& res) {
  ContentFeatures f;
  for (char32_t c : decode_utf8(text)) {
    ++f.n_chars;
    if (c == '?') ++f.n_question;
    if (c == '!') ++f.n_exclaim;
    if (c >= 'A' && c <= 'Z') ++f.n_upper_chars;
  }
  for (const auto& token : split_whitespace(text)) {
    switch (classify_token(token)) {
      case TokenKind::kUrl: ++f.n_urls; continue;
      case TokenKind::kMention: ++f.n_mentions; continue;
      case TokenKind::kHashtag: ++f.n_hashtags; continue;
      case TokenKind::kOther: break;
    }
    if (res.happy_emoticons.count(token)) {
      ++f.n_happy_emoticons;
      continue;
    }
    if (res.sad_emoticons.count(token)) {
      ++f.n_sad_emoticons;
      continue;
    }
    if (!has_word_character(token)) continue;
    ++f.n_words;
    const std::string w = normalize_word(token);
    if (res.positive_words.count(w)) {
      ++f.n_pos_words;
    } else if (res.negative_words.count(w)) {
      ++f.n_neg_words;
    }
    if (res.first_person.count(w)) ++f.n_first_pron;
    if (res.second_person.count(w)) ++f.n_second_pron;
    if (res.third_person.count(w)) ++f.n_third_pron;
  }
  f.readability = flesch_reading_ease(text);
  return f;
}

ContentFeatures extract_content_features(const data::MessageRecord& m, const TextResources& res) {
  return extract_content_features(m.text, res);
}

SocialFeatures extract_social_features(const data::MessageRecord& m) {
  SocialFeatures s;
  const auto& u = m.user;
  s.followers = u.followers.value_or(0);
  s.friends = u.friends.value_or(0);
  s.posts = u.posts.value_or(0);
  s.times_listed = u.times_listed.value_or(0);
  s.likes_given = u.likes_given.value_or(0);
  s.retweets = m.retweet_count;
  s.likes = m.like_count;
  s.friends_followers_ratio =
      static_cast<double>(s.friends) / static_cast<double>(std::max<std::int64_t>(s.followers, 1));
  s.verified = u.verified ? 1 : 0;
  s.has_profile_image = u.has_profile_image ? 1 : 0;
  s.has_homepage_url = u.has_homepage_url ? 1 : 0;
  s.followers_missing = u.followers ? 0 : 1;
  s.friends_missing = u.friends ? 0 : 1;
  s.posts_missing = u.posts ? 0 : 1;
  s.times_listed_missing = u.times_listed ? 0 : 1;
  s.likes_given_missing = u.likes_given ? 0 : 1;
  return s;
}

data::FeatureMatrix extract_textual_matrix(const data::Dataset& d, const TextResources& res) {
  std::vector<std::string> names;
  for (auto n : ContentFeatures::names()) names.emplace_back(n);
  for (auto n : SocialFeatures::names()) names.emplace_back(n);
  std::vector<double> values;
  values.reserve(d.size() * names.size());
  std::vector<std::string> ids;
  data::Labels labels;
  bool labelled = true;
  for (const auto& rec : d.records) {
    auto c = extract_content_features(rec, res).values();
    auto s = extract_social_features(rec).values();
    values.insert(values.end(), c.begin(), c.end());
    values.insert(values.end(), s.begin(), s.end());
    ids.push_back(rec.id);
    if (rec.label) {
      labels.push_back(data::to_int(*rec.label));
    } else {
      labelled = false;
    }
  }
  std::vector<data::Modality> mods(names.size(), data::Modality::kTextual);
  return data::FeatureMatrix(std::move(names), std::move(mods), std::move(ids), std::move(values),
                             labelled ? std::optional<data::Labels>(std::move(labels)) : std::nullopt);
}

}  // namespace monitor::text
