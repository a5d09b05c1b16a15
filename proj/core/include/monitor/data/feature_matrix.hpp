#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monitor/data/types.hpp"

namespace monitor::data {

enum class Modality { kTextual, kVisual };

const char* to_string(Modality m);

/// Names of the image-derived columns. Loading a matrix from CSV uses this
/// set to restore column modalities, since the CSV header carries names only.
std::span<const std::string_view> visual_column_names();
bool is_visual_column(std::string_view name);

/// Named n x d matrix of finite values with parallel row ids and optional labels.
/// Values are row-major. Invariants are checked on construction.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::vector<std::string> column_names, std::vector<Modality> modalities,
                std::vector<std::string> row_ids, std::vector<double> values,
                std::optional<Labels> labels = std::nullopt);

  std::size_t rows() const { return row_ids_.size(); }
  std::size_t cols() const { return column_names_.size(); }

  double at(std::size_t r, std::size_t c) const { return values_[r * cols() + c]; }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  std::vector<double> column(std::size_t c) const;
  std::span<const double> values() const { return values_; }

  const std::vector<std::string>& column_names() const { return column_names_; }
  const std::vector<Modality>& modalities() const { return modalities_; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  bool has_labels() const { return labels_.has_value(); }
  const Labels& labels() const;
  const std::optional<Labels>& maybe_labels() const { return labels_; }

  std::optional<std::size_t> find_column(std::string_view name) const;

  FeatureMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Throws kFeatureMismatch naming any column that is absent.
  FeatureMatrix select_columns(std::span<const std::string> names) const;
  FeatureMatrix with_labels(std::optional<Labels> labels) const;
  FeatureMatrix with_values(std::vector<double> values) const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::vector<std::string> column_names_;
  std::vector<Modality> modalities_;
  std::vector<std::string> row_ids_;
  std::vector<double> values_;
  std::optional<Labels> labels_;
};

/// CSV: header `id,<col1>,...,<colD>[,label]`, shortest round-trip decimal
/// floats, UTF-8, LF line endings.
void save_feature_matrix(const FeatureMatrix& m, const std::filesystem::path& path);
FeatureMatrix load_feature_matrix(const std::filesystem::path& path);

std::string format_double(double v);
double parse_double(std::string_view text);

}  // namespace monitor::data
