#include "monitor/fusion/early.hpp"

#include "monitor/error.hpp"

namespace monitor::fusion {

data::FeatureMatrix early_fuse(const data::FeatureMatrix& textual,
                               const data::FeatureMatrix& visual) {
  require(textual.row_ids() == visual.row_ids(), ErrorKind::kInvalidArgument,
          "early fusion: the two blocks have different rows");
  if (textual.has_labels() && visual.has_labels())
    require(textual.labels() == visual.labels(), ErrorKind::kInvalidArgument,
            "early fusion: the two blocks disagree on labels");

  std::vector<std::string> names = textual.column_names();
  names.insert(names.end(), visual.column_names().begin(), visual.column_names().end());
  std::vector<data::Modality> mods = textual.modalities();
  mods.insert(mods.end(), visual.modalities().begin(), visual.modalities().end());

  const std::size_t n = textual.rows(), dt = textual.cols(), dv = visual.cols();
  std::vector<double> values;
  values.reserve(n * (dt + dv));
  for (std::size_t r = 0; r < n; ++r) {
    const auto a = textual.row(r);
    const auto b = visual.row(r);
    values.insert(values.end(), a.begin(), a.end());
    values.insert(values.end(), b.begin(), b.end());
  }
  auto labels = textual.has_labels() ? textual.maybe_labels() : visual.maybe_labels();
  return data::FeatureMatrix(std::move(names), std::move(mods), textual.row_ids(),
                             std::move(values), std::move(labels));
}

}  // namespace monitor::fusion
