#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace monitor::vision {

/// Dense row-major field of reals. Used for luminance, MSCN coefficients and
/// local deviation maps.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  Plane() = default;
  Plane(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  double& operator()(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double operator()(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }
};

/// Luminance image, at least 16x16, finite values on the [0, 255] scale.
class GrayImage {
 public:
  static constexpr int kMinSide = 16;

  GrayImage(int width, int height, std::vector<double> pixels);
  explicit GrayImage(Plane plane);

  int width() const { return plane_.width; }
  int height() const { return plane_.height; }
  const Plane& plane() const { return plane_; }
  double operator()(int x, int y) const { return plane_(x, y); }

 private:
  Plane plane_;
};

/// A decoded image file: its luminance plus the SHA-256 of the decoded
/// canonical pixel bytes (8-bit BGR rows, preceded by the dimensions).
struct DecodedImage {
  GrayImage gray;
  std::string pixel_sha256;
};

/// Reads PNG or JPEG. Colour is converted with BT.601 weights (0.299, 0.587, 0.114).
DecodedImage decode_image(const std::filesystem::path& path);
GrayImage load_gray(const std::filesystem::path& path);
std::string pixel_sha256(const std::filesystem::path& path);

/// Writes an 8-bit grayscale PNG (values rounded and clamped).
void save_gray_png(const GrayImage& img, const std::filesystem::path& path);

/// Top-left crop.
GrayImage crop(const GrayImage& img, int x, int y, int width, int height);

}  // namespace monitor::vision
