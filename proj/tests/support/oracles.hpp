#pragma once

// Independent reference implementations used to check the library. They are
// written for clarity over speed and share no code with core/.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline double entropy_bits(const std::vector<int>& labels) {
  std::map<int, double> counts;
  for (int l : labels) counts[l] += 1.0;
  double h = 0.0;
  const double n = static_cast<double>(labels.size());
  for (const auto& [_, c] : counts) h -= (c / n) * std::log2(c / n);
  return h;
}

// Equal-frequency bin of each value: its bin is the bin of the first rank
// occupied by its tie group, i.e. (#values strictly below) * bins / n.
inline std::vector<int> frequency_bins(const std::vector<double>& values, int bins) {
  const std::size_t n = values.size();
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t below = 0;
    for (double v : values) below += v < values[i] ? 1 : 0;
    out[i] = static_cast<int>(below * static_cast<std::size_t>(bins) / n);
  }
  return out;
}

inline double gain_ratio(const std::vector<double>& column, const std::vector<int>& labels,
                         int bins) {
  const auto b = frequency_bins(column, bins);
  const double n = static_cast<double>(labels.size());
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < b.size(); ++i) groups[b[i]].push_back(labels[i]);
  double conditional = 0.0;
  for (const auto& [_, g] : groups) conditional += (g.size() / n) * entropy_bits(g);
  const double gain = entropy_bits(labels) - conditional;
  const double split = entropy_bits(b);
  return split == 0.0 ? 0.0 : gain / split;
}

// Probability that a random positive outranks a random negative, ties count half.
inline double mann_whitney_auc(const std::vector<int>& y, const std::vector<double>& s) {
  double wins = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 1) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) continue;
      pairs += 1.0;
      if (s[i] > s[j]) wins += 1.0;
      else if (s[i] == s[j]) wins += 0.5;
    }
  }
  return wins / pairs;
}

inline double quantile_type7(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

// Best training accuracy over every axis-aligned single split, in either
// orientation, plus the constant predictors.
inline double best_stump_accuracy(const std::vector<std::vector<double>>& x,
                                  const std::vector<int>& y) {
  const double n = static_cast<double>(y.size());
  const double ones = std::accumulate(y.begin(), y.end(), 0.0);
  double best = std::max(ones, n - ones) / n;
  for (std::size_t f = 0; f < x.front().size(); ++f) {
    std::vector<double> cuts;
    for (const auto& row : x) cuts.push_back(row[f]);
    for (double t : cuts) {
      for (int left_label = 0; left_label <= 1; ++left_label) {
        double correct = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
          const int pred = x[i][f] <= t ? left_label : 1 - left_label;
          correct += pred == y[i] ? 1.0 : 0.0;
        }
        best = std::max(best, correct / n);
      }
    }
  }
  return best;
}

// Fraction of fake votes among the k nearest training rows (Euclidean,
// ties by row index).
inline double knn_fake_share(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                             const std::vector<double>& q, int k) {
  std::vector<std::pair<double, std::size_t>> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double s = 0.0;
    for (std::size_t c = 0; c < q.size(); ++c) s += (x[i][c] - q[c]) * (x[i][c] - q[c]);
    d.emplace_back(s, i);
  }
  std::sort(d.begin(), d.end());
  double votes = 0.0;
  for (int i = 0; i < k; ++i) votes += y[d[static_cast<std::size_t>(i)].second];
  return votes / k;
}

inline double flesch(double words, double sentences, double syllables) {
  return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words);
}

}  // namespace oracle
