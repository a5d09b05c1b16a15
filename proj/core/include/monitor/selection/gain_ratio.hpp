#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "monitor/data/feature_matrix.hpp"

namespace monitor::selection {

/// Shannon entropy of the class distribution, in bits.
double entropy(std::span<const int> labels);

/// Equal-frequency bin index per value. Rows are ranked by value and bin b
/// holds ranks [b*n/bins, (b+1)*n/bins); tied values all take the bin of the
/// first rank they occupy, so a constant column lands in a single bin.
std::vector<int> equal_frequency_bins(std::span<const double> column, int bins);

/// Information gain of the binned column over the labels, divided by the
/// entropy of the bin sizes. Zero when all rows share one bin.
double gain_ratio(std::span<const double> column, std::span<const int> labels, int bins);

/// min(10, ceil(sqrt(n))), at least 2.
int default_bin_count(std::size_t n);

struct RankingEntry {
  std::string column;
  double gain_ratio = 0.0;
  bool selected = false;
};

struct FeatureRanking {
  std::vector<RankingEntry> entries;  // descending ratio, ties by name
  double threshold = 0.0;
  std::vector<std::string> selected;
};

/// Ranks the textual columns of a labeled matrix. Visual columns are never
/// candidates. Selected are the first min(top_k, #ratio > threshold) entries.
FeatureRanking select_features(const data::FeatureMatrix& m, double threshold = 0.0,
                               int top_k = 15);

/// CSV with header `column_name,gain_ratio,selected`.
void save_ranking(const FeatureRanking& r, const std::filesystem::path& path);

}  // namespace monitor::selection
