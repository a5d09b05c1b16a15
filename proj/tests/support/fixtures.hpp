#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/rng.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return MONITOR_TEST_DATA_DIR; }

// Fresh empty directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::path(MONITOR_TEST_SCRATCH_DIR) / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline monitor::data::FeatureMatrix matrix(const std::vector<std::string>& names,
                                           const std::vector<std::vector<double>>& rows,
                                           std::vector<int> labels = {}) {
  using monitor::data::Modality;
  std::vector<Modality> mods;
  for (const auto& n : names)
    mods.push_back(monitor::data::is_visual_column(n) ? Modality::kVisual : Modality::kTextual);
  std::vector<std::string> ids;
  std::vector<double> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ids.push_back("r" + std::to_string(r));
    values.insert(values.end(), rows[r].begin(), rows[r].end());
  }
  std::optional<monitor::data::Labels> l;
  if (!labels.empty()) l = std::move(labels);
  return {names, mods, ids, values, l};
}

// Two Gaussian clouds in d dimensions, centred at -gap/2 and +gap/2.
inline monitor::data::FeatureMatrix blobs(std::size_t n, int d, double gap, std::uint64_t seed) {
  monitor::Rng rng(seed);
  std::vector<std::string> names;
  for (int c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
  std::vector<std::vector<double>> rows;
  std::vector<int> y;
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    std::vector<double> row;
    for (int c = 0; c < d; ++c) row.push_back(rng.normal() + (label ? gap / 2 : -gap / 2));
    rows.push_back(row);
    y.push_back(label);
  }
  return matrix(names, rows, y);
}

}  // namespace fixtures
