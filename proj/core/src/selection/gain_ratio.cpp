#include "monitor/selection/gain_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include "monitor/data/csv.hpp"
#include "monitor/error.hpp"

namespace monitor::selection {
namespace {

double entropy_of_counts(const std::vector<std::size_t>& counts, std::size_t total) {
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double entropy(std::span<const int> labels) {
  require(!labels.empty(), ErrorKind::kInvalidArgument, "entropy of an empty label list");
  std::map<int, std::size_t> counts;
  for (int l : labels) ++counts[l];
  std::vector<std::size_t> c;
  for (const auto& [_, n] : counts) c.push_back(n);
  return entropy_of_counts(c, labels.size());
}

std::vector<int> equal_frequency_bins(std::span<const double> column, int bins) {
  require(bins >= 1, ErrorKind::kInvalidArgument, "bin count must be positive");
  const std::size_t n = column.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return column[a] < column[b]; });
  std::vector<int> out(n, 0);
  std::size_t rank = 0;
  while (rank < n) {
    std::size_t end = rank;
    while (end < n && column[order[end]] == column[order[rank]]) ++end;
    const int bin = static_cast<int>(rank * static_cast<std::size_t>(bins) / n);
    for (std::size_t k = rank; k < end; ++k) out[order[k]] = bin;
    rank = end;
  }
  return out;
}

double gain_ratio(std::span<const double> column, std::span<const int> labels, int bins) {
  require(column.size() == labels.size(), ErrorKind::kInvalidArgument,
          "gain_ratio: column and labels differ in length");
  require(column.size() >= 2, ErrorKind::kInvalidArgument, "gain_ratio needs at least 2 rows");
  require(bins >= 2, ErrorKind::kInvalidArgument, "gain_ratio needs at least 2 bins");
  const std::size_t n = column.size();
  const std::vector<int> bin_of = equal_frequency_bins(column, bins);

  std::map<int, std::map<int, std::size_t>> table;  // bin -> label -> count
  for (std::size_t i = 0; i < n; ++i) ++table[bin_of[i]][labels[i]];
  if (table.size() < 2) return 0.0;

  std::vector<std::size_t> bin_sizes;
  double conditional = 0.0;
  for (const auto& [_, per_label] : table) {
    std::vector<std::size_t> c;
    std::size_t size = 0;
    for (const auto& [__, k] : per_label) {
      c.push_back(k);
      size += k;
    }
    bin_sizes.push_back(size);
    conditional += static_cast<double>(size) / n * entropy_of_counts(c, size);
  }
  const double split_info = entropy_of_counts(bin_sizes, n);
  if (split_info <= 0.0) return 0.0;
  const double gain = std::max(0.0, entropy(labels) - conditional);
  return gain / split_info;
}

int default_bin_count(std::size_t n) {
  const int root = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  return std::max(2, std::min(10, root));
}

FeatureRanking select_features(const data::FeatureMatrix& m, double threshold, int top_k) {
  require(m.has_labels(), ErrorKind::kInvalidArgument, "feature selection needs labels");
  require(top_k >= 0, ErrorKind::kInvalidArgument, "top_k must be non-negative");
  const data::Labels& y = m.labels();
  const int bins = default_bin_count(m.rows());

  FeatureRanking r;
  r.threshold = threshold;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.modalities()[c] != data::Modality::kTextual) continue;
    const std::vector<double> col = m.column(c);
    r.entries.push_back({m.column_names()[c], gain_ratio(col, y, bins), false});
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const RankingEntry& a, const RankingEntry& b) {
    if (a.gain_ratio != b.gain_ratio) return a.gain_ratio > b.gain_ratio;
    return a.column < b.column;
  });
  for (auto& e : r.entries) {
    if (static_cast<int>(r.selected.size()) >= top_k) break;
    if (!(e.gain_ratio > threshold)) break;
    e.selected = true;
    r.selected.push_back(e.column);
  }
  return r;
}

void save_ranking(const FeatureRanking& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path.string());
  out << "column_name,gain_ratio,selected\n";
  for (const auto& e : r.entries)
    out << data::csv::escape(e.column) << ',' << data::format_double(e.gain_ratio) << ','
        << (e.selected ? 1 : 0) << '\n';
}

}  // namespace monitor::selection
