#include "monitor/data/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "monitor/error.hpp"
#include "monitor/rng.hpp"

namespace monitor::data {

std::size_t fraction_count(std::size_t n, double fraction) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * fraction + 1e-9));
}

IndexSplit split_indices(const Labels& labels, double test_fraction, bool stratified,
                         std::uint64_t seed) {
  require(test_fraction > 0.0 && test_fraction < 1.0, ErrorKind::kInvalidArgument,
          "test fraction must lie in (0, 1)");
  const std::size_t n = labels.size();
  const std::size_t n_test = fraction_count(n, test_fraction);
  require(n_test >= 1 && n_test < n, ErrorKind::kInvalidArgument,
          "split of " + std::to_string(n) + " rows leaves an empty side");
  Rng rng(seed);
  std::vector<char> in_test(n, 0);

  if (!stratified) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));
    for (std::size_t i = 0; i < n_test; ++i) in_test[order[i]] = 1;
  } else {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < n; ++i) by_class[labels[i]].push_back(i);
    for (const auto& [cls, rows] : by_class) {
      require(rows.size() >= 2, ErrorKind::kInvalidArgument,
              "stratification impossible: class " + std::to_string(cls) + " has " +
                  std::to_string(rows.size()) + " record(s)");
    }
    struct Quota {
      int cls;
      std::size_t take;
      double remainder;
    };
    std::vector<Quota> quotas;
    std::size_t assigned = 0;
    for (const auto& [cls, rows] : by_class) {
      const double exact = static_cast<double>(rows.size()) * test_fraction;
      const std::size_t take = fraction_count(rows.size(), test_fraction);
      quotas.push_back({cls, take, exact - static_cast<double>(take)});
      assigned += take;
    }
    std::vector<std::size_t> by_remainder(quotas.size());
    std::iota(by_remainder.begin(), by_remainder.end(), 0);
    std::stable_sort(by_remainder.begin(), by_remainder.end(),
                     [&](std::size_t a, std::size_t b) { return quotas[a].remainder > quotas[b].remainder; });
    for (std::size_t k = 0; assigned < n_test && k < by_remainder.size(); ++k) {
      ++quotas[by_remainder[k]].take;
      ++assigned;
    }
    for (const auto& q : quotas) {
      auto rows = by_class[q.cls];
      rng.shuffle(std::span(rows));
      for (std::size_t i = 0; i < q.take && i < rows.size(); ++i) in_test[rows[i]] = 1;
    }
  }

  IndexSplit out;
  for (std::size_t i = 0; i < n; ++i) (in_test[i] ? out.test : out.train).push_back(i);
  return out;
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& d, double test_fraction,
                                             bool stratified, std::uint64_t seed,
                                             SplitMode mode) {
  if (mode == SplitMode::kMessage) {
    Labels labels = stratified ? d.labels() : Labels(d.size(), 0);
    auto s = split_indices(labels, test_fraction, stratified, seed);
    return {d.subset(s.train), d.subset(s.test)};
  }

  require(test_fraction > 0.0 && test_fraction < 1.0, ErrorKind::kInvalidArgument,
          "test fraction must lie in (0, 1)");
  // Event mode: shuffle events, fill the test side until it reaches its target size.
  std::map<std::string, std::vector<std::size_t>> by_event;
  for (std::size_t i = 0; i < d.size(); ++i) by_event[d.records[i].event_id].push_back(i);
  require(by_event.size() >= 2, ErrorKind::kInvalidArgument,
          "event-level split needs at least two events");
  std::vector<std::string> events;
  for (const auto& [e, _] : by_event) events.push_back(e);
  Rng rng(seed);
  rng.shuffle(std::span(events));
  const std::size_t target = std::max<std::size_t>(1, fraction_count(d.size(), test_fraction));
  std::vector<char> in_test(d.size(), 0);
  std::size_t taken = 0;
  for (std::size_t k = 0; k + 1 < events.size() && taken < target; ++k) {
    for (auto i : by_event[events[k]]) in_test[i] = 1;
    taken += by_event[events[k]].size();
  }
  std::vector<std::size_t> train, test;
  for (std::size_t i = 0; i < d.size(); ++i) (in_test[i] ? test : train).push_back(i);
  return {d.subset(train), d.subset(test)};
}

}  // namespace monitor::data
