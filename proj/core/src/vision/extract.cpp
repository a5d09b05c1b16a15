#include "monitor/vision/extract.hpp"

#include <algorithm>
#include <map>

#include "monitor/error.hpp"
#include "monitor/vision/brisque.hpp"
#include "monitor/vision/niqe.hpp"
#include "monitor/vision/piqe.hpp"

namespace monitor::vision {
namespace {

bool is_image_file(const std::filesystem::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

struct ImageScores {
  double brisque = 0.0;
  double piqe = 0.0;
  double niqe = 0.0;
  std::string identity;
};

}  // namespace

std::vector<GrayImage> load_corpus(const std::filesystem::path& dir) {
  require(std::filesystem::is_directory(dir), ErrorKind::kIo,
          "pristine corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && is_image_file(e.path())) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<GrayImage> corpus;
  for (const auto& f : files) corpus.push_back(load_gray(f));
  return corpus;
}

IqaModels IqaModels::fit_from_directory(const std::filesystem::path& dir) {
  const auto corpus = load_corpus(dir);
  return {fit_brisque_model(corpus), fit_pristine_model(corpus, PristineFeatures::kNiqePatches)};
}

data::FeatureMatrix extract_visual_matrix(const data::Dataset& d, const IqaModels& models,
                                          const ImageIdentity& identity) {
  std::map<std::filesystem::path, ImageScores> cache;
  auto scores_for = [&](const std::filesystem::path& p) -> const ImageScores& {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    const GrayImage img = load_gray(p);
    ImageScores s;
    s.brisque = brisque_score(img, models.brisque);
    s.piqe = piqe_score(img);
    s.niqe = niqe_score(img, models.niqe);
    s.identity = identity(p);
    return cache.emplace(p, std::move(s)).first->second;
  };

  // Event statistics reuse the cached identities.
  const ImageIdentity cached_identity = [&](const std::filesystem::path& p) {
    return scores_for(p).identity;
  };
  const auto event_stats = event_image_stats(group_by_event(d), cached_identity);

  std::vector<std::string> names;
  for (auto n : data::visual_column_names()) names.emplace_back(n);
  std::vector<double> values;
  values.reserve(d.size() * names.size());
  std::vector<std::string> ids;
  data::Labels labels;
  bool labelled = true;
  for (const auto& rec : d.records) {
    double b = 0.0, p = 0.0, n = 0.0;
    for (const auto& path : rec.image_paths) {
      const auto& s = scores_for(path);
      b += s.brisque;
      p += s.piqe;
      n += s.niqe;
    }
    if (!rec.image_paths.empty()) {
      const double k = static_cast<double>(rec.image_paths.size());
      b /= k;
      p /= k;
      n /= k;
    }
    const auto& e = event_stats.at(rec.event_id);
    for (double v : {b, p, n, static_cast<double>(e.count_img), e.ratio_img1, e.ratio_img2,
                     e.ratio_img3})
      values.push_back(v);
    ids.push_back(rec.id);
    if (rec.label) {
      labels.push_back(data::to_int(*rec.label));
    } else {
      labelled = false;
    }
  }
  std::vector<data::Modality> mods(names.size(), data::Modality::kVisual);
  return data::FeatureMatrix(std::move(names), std::move(mods), std::move(ids), std::move(values),
                             labelled ? std::optional<data::Labels>(std::move(labels)) : std::nullopt);
}

}  // namespace monitor::vision
