#include "monitor/data/feature_matrix.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "monitor/data/csv.hpp"
#include "monitor/error.hpp"

namespace monitor::data {
namespace {

constexpr std::array<std::string_view, 7> kVisualColumns = {
    "brisque", "piqe", "niqe", "count_img", "ratio_img1", "ratio_img2", "ratio_img3"};

}  // namespace

const char* to_string(Modality m) { return m == Modality::kTextual ? "textual" : "visual"; }

std::span<const std::string_view> visual_column_names() { return kVisualColumns; }

bool is_visual_column(std::string_view name) {
  return std::find(kVisualColumns.begin(), kVisualColumns.end(), name) != kVisualColumns.end();
}

FeatureMatrix::FeatureMatrix(std::vector<std::string> column_names,
                             std::vector<Modality> modalities, std::vector<std::string> row_ids,
                             std::vector<double> values, std::optional<Labels> labels)
    : column_names_(std::move(column_names)),
      modalities_(std::move(modalities)),
      row_ids_(std::move(row_ids)),
      values_(std::move(values)),
      labels_(std::move(labels)) {
  require(modalities_.size() == column_names_.size(), ErrorKind::kInvalidArgument,
          "modality list length differs from column count");
  require(values_.size() == row_ids_.size() * column_names_.size(), ErrorKind::kInvalidArgument,
          "value count is not rows x cols");
  require(!labels_ || labels_->size() == row_ids_.size(), ErrorKind::kInvalidArgument,
          "label count differs from row count");
  std::unordered_set<std::string_view> seen;
  for (const auto& c : column_names_) {
    require(seen.insert(c).second, ErrorKind::kSchema, "duplicate column '" + c + "'");
  }
  for (double v : values_) {
    require(std::isfinite(v), ErrorKind::kInvalidArgument, "feature matrix holds a non-finite value");
  }
}

std::vector<double> FeatureMatrix::column(std::size_t c) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

const Labels& FeatureMatrix::labels() const {
  require(labels_.has_value(), ErrorKind::kSchema, "feature matrix has no labels");
  return *labels_;
}

std::optional<std::size_t> FeatureMatrix::find_column(std::string_view name) const {
  auto it = std::find(column_names_.begin(), column_names_.end(), name);
  if (it == column_names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - column_names_.begin());
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<std::string> ids;
  std::vector<double> vals;
  ids.reserve(indices.size());
  vals.reserve(indices.size() * cols());
  std::optional<Labels> labs;
  if (labels_) labs.emplace();
  for (auto i : indices) {
    require(i < rows(), ErrorKind::kInvalidArgument, "row index out of range");
    ids.push_back(row_ids_[i]);
    auto r = row(i);
    vals.insert(vals.end(), r.begin(), r.end());
    if (labs) labs->push_back((*labels_)[i]);
  }
  return FeatureMatrix(column_names_, modalities_, std::move(ids), std::move(vals), std::move(labs));
}

FeatureMatrix FeatureMatrix::select_columns(std::span<const std::string> names) const {
  std::vector<std::size_t> idx;
  std::string missing;
  for (const auto& n : names) {
    if (auto c = find_column(n)) {
      idx.push_back(*c);
    } else {
      missing += (missing.empty() ? "" : ", ") + n;
    }
  }
  require(missing.empty(), ErrorKind::kFeatureMismatch, "missing columns: " + missing);
  std::vector<std::string> cn;
  std::vector<Modality> mods;
  for (auto c : idx) {
    cn.push_back(column_names_[c]);
    mods.push_back(modalities_[c]);
  }
  std::vector<double> vals;
  vals.reserve(rows() * idx.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (auto c : idx) vals.push_back(at(r, c));
  }
  return FeatureMatrix(std::move(cn), std::move(mods), row_ids_, std::move(vals), labels_);
}

FeatureMatrix FeatureMatrix::with_labels(std::optional<Labels> labels) const {
  return FeatureMatrix(column_names_, modalities_, row_ids_, values_, std::move(labels));
}

FeatureMatrix FeatureMatrix::with_values(std::vector<double> values) const {
  return FeatureMatrix(column_names_, modalities_, row_ids_, std::move(values), labels_);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  require(ec == std::errc() && ptr == text.data() + text.size(), ErrorKind::kSchema,
          "not a number: '" + std::string(text) + "'");
  return v;
}

void save_feature_matrix(const FeatureMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path.string());
  out << "id";
  for (const auto& c : m.column_names()) out << ',' << csv::escape(c);
  if (m.has_labels()) out << ",label";
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << csv::escape(m.row_ids()[r]);
    for (double v : m.row(r)) out << ',' << format_double(v);
    if (m.has_labels()) out << ',' << m.labels()[r];
    out << '\n';
  }
  require(static_cast<bool>(out), ErrorKind::kIo, "write failed for " + path.string());
}

FeatureMatrix load_feature_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read " + path.string());
  auto header = csv::read_record(in);
  require(header && !header->empty() && (*header)[0] == "id", ErrorKind::kSchema,
          path.string() + ": header must start with 'id'");
  const bool labelled = header->size() >= 2 && header->back() == "label";
  std::vector<std::string> names(header->begin() + 1, header->end() - (labelled ? 1 : 0));
  std::vector<Modality> mods;
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    require(seen.insert(n).second, ErrorKind::kSchema, path.string() + ": duplicate column '" + n + "'");
    mods.push_back(is_visual_column(n) ? Modality::kVisual : Modality::kTextual);
  }
  std::vector<std::string> ids;
  std::vector<double> vals;
  std::optional<Labels> labels;
  if (labelled) labels.emplace();
  std::size_t line = 1;
  while (auto rec = csv::read_record(in)) {
    ++line;
    if (rec->size() == 1 && (*rec)[0].empty()) continue;
    require(rec->size() == header->size(), ErrorKind::kSchema,
            path.string() + ":" + std::to_string(line) + ": field count differs from header");
    ids.push_back((*rec)[0]);
    for (std::size_t c = 0; c < names.size(); ++c) {
      const double v = parse_double((*rec)[c + 1]);
      require(std::isfinite(v), ErrorKind::kSchema,
              path.string() + ":" + std::to_string(line) + ": non-finite value");
      vals.push_back(v);
    }
    if (labelled) {
      const auto& l = rec->back();
      require(l == "0" || l == "1", ErrorKind::kSchema,
              path.string() + ":" + std::to_string(line) + ": label must be 0 or 1");
      labels->push_back(l == "1" ? 1 : 0);
    }
  }
  return FeatureMatrix(std::move(names), std::move(mods), std::move(ids), std::move(vals),
                       std::move(labels));
}

}  // namespace monitor::data
