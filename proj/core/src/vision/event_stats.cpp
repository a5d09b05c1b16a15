#include "monitor/vision/event_stats.hpp"

#include <algorithm>
#include <unordered_map>

#include "monitor/error.hpp"
#include "monitor/vision/image.hpp"

namespace monitor::vision {

ImageIdentity pixel_identity() {
  return [](const std::filesystem::path& p) { return pixel_sha256(p); };
}

EventMap group_by_event(const data::Dataset& d) {
  EventMap events;
  for (const auto& r : d.records) events[r.event_id].push_back(r);
  return events;
}

std::map<std::string, EventImageStats> event_image_stats(const EventMap& events,
                                                         const ImageIdentity& identity) {
  std::map<std::string, EventImageStats> out;
  for (const auto& [event, records] : events) {
    require(!records.empty(), ErrorKind::kInvalidArgument, "event '" + event + "' is empty");
    EventImageStats s;
    int multi = 0;
    std::unordered_map<std::string, int> occurrences;
    for (const auto& r : records) {
      const int k = static_cast<int>(r.image_paths.size());
      s.count_img += k;
      if (k >= 2) ++multi;
      for (const auto& p : r.image_paths) ++occurrences[identity(p)];
    }
    const double tweets = static_cast<double>(records.size());
    s.ratio_img1 = multi / tweets;
    s.ratio_img2 = s.count_img / tweets;
    if (s.count_img > 0) {
      int top = 0;
      for (const auto& [_, n] : occurrences) top = std::max(top, n);
      s.ratio_img3 = static_cast<double>(top) / s.count_img;
    }
    out.emplace(event, s);
  }
  return out;
}

}  // namespace monitor::vision
