#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monitor/data/types.hpp"

namespace monitor::data {

struct IndexSplit {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// Test size is floor(n * test_fraction). A stratified split allocates each
/// class floor(n_c * test_fraction) test rows and hands the leftover slots to
/// the classes with the largest fractional remainder, so every class is within
/// one row of its exact share.
IndexSplit split_indices(const Labels& labels, double test_fraction, bool stratified,
                         std::uint64_t seed);

enum class SplitMode { kMessage, kEvent };

/// Returns (train, test). Event mode keeps all messages of an event on one side.
std::pair<Dataset, Dataset> split_train_test(const Dataset& d, double test_fraction,
                                             bool stratified, std::uint64_t seed,
                                             SplitMode mode = SplitMode::kMessage);

/// floor(n * fraction) with a tolerance for representation error (0.29 * 100).
std::size_t fraction_count(std::size_t n, double fraction);

}  // namespace monitor::data
