#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "monitor/data/csv.hpp"
#include "monitor/data/dataset.hpp"
#include "monitor/data/feature_matrix.hpp"
#include "monitor/data/split.hpp"
#include "monitor/data/synthetic.hpp"
#include "monitor/error.hpp"

using namespace monitor;
using namespace monitor::data;

namespace {

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                 const std::string& body) {
  auto p = dir / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

std::string jsonl_row(const std::string& id, const std::string& label, bool with_text = true) {
  std::string row = R"({"id": ")" + id + R"(", "event_id": "e1", )";
  if (with_text) row += R"("text": "hello world", )";
  row += R"("label": ")" + label + R"(", "retweet_count": 1, "like_count": 2, )"
         R"("user": {"followers": 3, "friends": 4, "posts": 5, "times_listed": 0, )"
         R"("likes_given": 1, "verified": false, "has_profile_image": true, )"
         R"("has_homepage_url": false}, "image_paths": []})";
  return row + "\n";
}

Labels balanced(std::size_t n) {
  Labels y;
  for (std::size_t i = 0; i < n; ++i) y.push_back(static_cast<int>(i % 2));
  return y;
}

}  // namespace

TEST_CASE("empty jsonl is rejected with zero valid records") {
  auto dir = fixtures::scratch("data_empty");
  auto p = write_file(dir, "empty.jsonl", "");
  try {
    load_dataset(p, DatasetFormat::kJsonl);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSchema);
    CHECK(std::string(e.what()).find("zero valid records") != std::string::npos);
  }
}

TEST_CASE("a row without text is rejected and reported") {
  auto dir = fixtures::scratch("data_missing_text");
  auto p = write_file(dir, "three.jsonl",
                      jsonl_row("a", "real") + jsonl_row("b", "fake", false) +
                          jsonl_row("c", "fake"));
  const Dataset d = load_dataset(p, DatasetFormat::kJsonl);
  CHECK(d.size() == 2);
  CHECK(d.rejected_count() == 1);
  CHECK(d.records[0].id == "a");
  CHECK(d.records[1].id == "c");
}

TEST_CASE("duplicate ids are an error") {
  auto dir = fixtures::scratch("data_dupe");
  auto p = write_file(dir, "dupe.jsonl", jsonl_row("a", "real") + jsonl_row("a", "fake"));
  CHECK_THROWS_AS(load_dataset(p, DatasetFormat::kJsonl), Error);
}

TEST_CASE("bundled mini dataset loads 50 records in file order") {
  const auto path = fixtures::data_dir() / "mini" / "messages.jsonl";
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string s; std::getline(in, s);) lines += s.empty() ? 0 : 1;
  const Dataset a = load_dataset(path, DatasetFormat::kJsonl);
  const Dataset b = load_dataset(path, DatasetFormat::kJsonl);
  CHECK(a.size() == 50);
  CHECK(a.size() == lines);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.records[i].id == b.records[i].id);
  std::size_t imageless = 0;
  for (const auto& r : a.records) imageless += r.image_paths.empty() ? 1 : 0;
  CHECK(imageless == 10);
}

TEST_CASE("absent user counts stay empty for later imputation") {
  auto dir = fixtures::scratch("data_absent");
  auto p = write_file(dir, "m.jsonl",
                      R"({"id": "x", "event_id": "e", "text": "t", "label": "fake", )"
                      R"("retweet_count": 0, "like_count": 0, "user": {"verified": true}, )"
                      R"("image_paths": []})"
                      "\n");
  const Dataset d = load_dataset(p, DatasetFormat::kJsonl);
  REQUIRE(d.size() == 1);
  CHECK_FALSE(d.records[0].user.followers.has_value());
  CHECK(d.records[0].user.verified);
}

TEST_CASE("require_image filter drops imageless records") {
  const Dataset d =
      load_dataset(fixtures::data_dir() / "mini" / "messages.jsonl", DatasetFormat::kJsonl);
  CHECK(filter_records(d, true).excluded_ids.size() == 10);
  CHECK(filter_records(d, false).excluded_ids.empty());
}

TEST_CASE("stratified split of 10 balanced rows at 0.2 puts one of each class in test") {
  const Labels y = balanced(10);
  const IndexSplit s = split_indices(y, 0.2, true, 3);
  CHECK(s.train.size() == 8);
  REQUIRE(s.test.size() == 2);
  CHECK(y[s.test[0]] + y[s.test[1]] == 1);
}

TEST_CASE("1000 rows at 0.5 split 500/500") {
  const IndexSplit s = split_indices(balanced(1000), 0.5, false, 11);
  CHECK(s.train.size() == 500);
  CHECK(s.test.size() == 500);
}

TEST_CASE("same seed gives identical split, different seed differs") {
  const Labels y = balanced(40);
  const IndexSplit a = split_indices(y, 0.25, true, 7);
  const IndexSplit b = split_indices(y, 0.25, true, 7);
  const IndexSplit c = split_indices(y, 0.25, true, 8);
  CHECK(a.test == b.test);
  CHECK(a.train == b.train);
  CHECK(a.test != c.test);
}

TEST_CASE("stratified proportions stay within one row per class") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Labels y;
    for (int i = 0; i < 37; ++i) y.push_back(i % 3 == 0 ? 1 : 0);
    const IndexSplit s = split_indices(y, 0.3, true, seed);
    double fake_test = 0;
    for (auto i : s.test) fake_test += y[i];
    const double fake_all = 13.0;
    CHECK(std::abs(fake_test - fake_all * 0.3) <= 1.0);
    CHECK(s.test.size() == fraction_count(37, 0.3));
  }
}

TEST_CASE("split rejects fractions outside (0, 1)") {
  CHECK_THROWS_AS(split_indices(balanced(10), 0.0, false, 1), Error);
  CHECK_THROWS_AS(split_indices(balanced(10), 1.0, false, 1), Error);
}

TEST_CASE("stratification impossible with a single-row class") {
  Labels y(9, 0);
  y.push_back(1);
  CHECK_THROWS_AS(split_indices(y, 0.2, true, 1), Error);
}

TEST_CASE("event split keeps each event on one side") {
  Dataset d = load_dataset(fixtures::data_dir() / "mini" / "messages.jsonl", DatasetFormat::kJsonl);
  auto [train, test] = split_train_test(d, 0.2, false, 5, SplitMode::kEvent);
  std::set<std::string> train_events;
  for (const auto& r : train.records) train_events.insert(r.event_id);
  for (const auto& r : test.records) CHECK(train_events.count(r.event_id) == 0);
  CHECK(train.size() + test.size() == d.size());
}

TEST_CASE("feature matrix round trip is exact") {
  auto dir = fixtures::scratch("data_roundtrip");
  const FeatureMatrix m = fixtures::matrix(
      {"a", "b", "brisque"}, {{0.1, 1.0 / 3.0, -2.5e-300}, {1e300, 0.0, 42.0}}, {1, 0});
  save_feature_matrix(m, dir / "m.csv");
  const FeatureMatrix back = load_feature_matrix(dir / "m.csv");
  CHECK(back == m);
  CHECK(back.at(0, 0) == 0.1);
  CHECK(back.modalities()[2] == Modality::kVisual);
}

TEST_CASE("unlabeled matrix round trip") {
  auto dir = fixtures::scratch("data_roundtrip_nolabel");
  const FeatureMatrix m = fixtures::matrix({"x"}, {{1.5}, {2.5}});
  save_feature_matrix(m, dir / "m.csv");
  CHECK(load_feature_matrix(dir / "m.csv") == m);
}

TEST_CASE("duplicate header column fails to load") {
  auto dir = fixtures::scratch("data_dupe_col");
  write_file(dir, "m.csv", "id,a,a\nr0,1,2\n");
  CHECK_THROWS_AS(load_feature_matrix(dir / "m.csv"), Error);
}

TEST_CASE("non-finite values are refused") {
  CHECK_THROWS_AS(fixtures::matrix({"a"}, {{std::nan("")}}), Error);
  auto dir = fixtures::scratch("data_nan");
  write_file(dir, "m.csv", "id,a\nr0,inf\n");
  CHECK_THROWS_AS(load_feature_matrix(dir / "m.csv"), Error);
}

TEST_CASE("select_columns names what is missing") {
  const FeatureMatrix m = fixtures::matrix({"a", "b"}, {{1, 2}});
  const std::vector<std::string> want{"b", "zzz"};
  try {
    m.select_columns(want);
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFeatureMismatch);
    CHECK(std::string(e.what()).find("zzz") != std::string::npos);
  }
}

TEST_CASE("csv records with quoted separators and newlines") {
  std::istringstream in("a,\"b,c\",\"line\nbreak\"\nnext,1\n");
  auto r1 = csv::read_record(in);
  REQUIRE(r1);
  CHECK(*r1 == std::vector<std::string>{"a", "b,c", "line\nbreak"});
  auto r2 = csv::read_record(in);
  REQUIRE(r2);
  CHECK(r2->size() == 2);
  CHECK_FALSE(csv::read_record(in));
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a\"b") == "\"a\"\"b\"");
}

TEST_CASE("synthetic two-modality blobs have the documented shape") {
  const FeatureMatrix m = make_two_modality_blobs({}, 4);
  CHECK(m.rows() == 2000);
  CHECK(m.column_names() == std::vector<std::string>{"text_a", "text_b", "image_a", "image_b"});
  CHECK(m.modalities()[0] == Modality::kTextual);
  CHECK(m.modalities()[3] == Modality::kVisual);
  long fake = 0;
  for (int l : m.labels()) fake += l;
  CHECK(fake == 1000);
  CHECK(make_two_modality_blobs({}, 4) == m);
}
