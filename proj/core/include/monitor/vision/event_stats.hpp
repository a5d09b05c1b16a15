#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "monitor/data/types.hpp"

namespace monitor::vision {

struct EventImageStats {
  int count_img = 0;
  double ratio_img1 = 0.0;  // tweets with >= 2 images / tweets
  double ratio_img2 = 0.0;  // images / tweets
  double ratio_img3 = 0.0;  // occurrences of the most frequent distinct image / images
  friend bool operator==(const EventImageStats&, const EventImageStats&) = default;
};

/// Maps an image file to its identity. The default hashes decoded pixels, so
/// re-encodings with identical pixels collapse into one image.
using ImageIdentity = std::function<std::string(const std::filesystem::path&)>;
ImageIdentity pixel_identity();

using EventMap = std::map<std::string, std::vector<data::MessageRecord>>;
EventMap group_by_event(const data::Dataset& d);

/// Throws kInvalidArgument for an event with no record.
std::map<std::string, EventImageStats> event_image_stats(const EventMap& events,
                                                         const ImageIdentity& identity);

}  // namespace monitor::vision
