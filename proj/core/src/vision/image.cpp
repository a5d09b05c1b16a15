#include "monitor/vision/image.hpp"

#include <cmath>
#include <cstdint>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <openssl/evp.h>

#include "monitor/error.hpp"

namespace monitor::vision {
namespace {

void check_plane(const Plane& p) {
  require(p.width >= GrayImage::kMinSide && p.height >= GrayImage::kMinSide,
          ErrorKind::kInvalidArgument,
          "image must be at least 16x16, got " + std::to_string(p.width) + "x" +
              std::to_string(p.height));
  require(p.data.size() == static_cast<std::size_t>(p.width) * p.height,
          ErrorKind::kInvalidArgument, "pixel count differs from width x height");
  for (double v : p.data) {
    require(std::isfinite(v), ErrorKind::kInvalidArgument, "image holds a non-finite pixel");
  }
}

std::string sha256_hex(const cv::Mat& bgr) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  require(ctx != nullptr, ErrorKind::kIo, "cannot allocate digest context");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(bgr.cols),
                                 static_cast<std::uint32_t>(bgr.rows)};
  EVP_DigestUpdate(ctx, dims, sizeof(dims));
  const std::size_t row_bytes = static_cast<std::size_t>(bgr.cols) * bgr.elemSize();
  for (int r = 0; r < bgr.rows; ++r) EVP_DigestUpdate(ctx, bgr.ptr(r), row_bytes);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

cv::Mat read_bgr(const std::filesystem::path& path) {
  cv::Mat img = cv::imread(path.string(), cv::IMREAD_COLOR);
  require(!img.empty(), ErrorKind::kIo, "cannot decode image " + path.string());
  return img;
}

GrayImage luminance(const cv::Mat& bgr) {
  Plane p(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      p(x, y) = 0.299 * row[x][2] + 0.587 * row[x][1] + 0.114 * row[x][0];
    }
  }
  return GrayImage(std::move(p));
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::vector<double> pixels) {
  plane_.width = width;
  plane_.height = height;
  plane_.data = std::move(pixels);
  check_plane(plane_);
}

GrayImage::GrayImage(Plane plane) : plane_(std::move(plane)) { check_plane(plane_); }

DecodedImage decode_image(const std::filesystem::path& path) {
  cv::Mat bgr = read_bgr(path);
  return {luminance(bgr), sha256_hex(bgr)};
}

GrayImage load_gray(const std::filesystem::path& path) { return luminance(read_bgr(path)); }

std::string pixel_sha256(const std::filesystem::path& path) { return sha256_hex(read_bgr(path)); }

void save_gray_png(const GrayImage& img, const std::filesystem::path& path) {
  cv::Mat m(img.height(), img.width(), CV_8UC1);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      m.at<std::uint8_t>(y, x) = cv::saturate_cast<std::uint8_t>(std::lround(img(x, y)));
    }
  }
  require(cv::imwrite(path.string(), m), ErrorKind::kIo, "cannot write " + path.string());
}

GrayImage crop(const GrayImage& img, int x, int y, int width, int height) {
  require(x >= 0 && y >= 0 && x + width <= img.width() && y + height <= img.height(),
          ErrorKind::kInvalidArgument, "crop outside the image");
  Plane p(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) p(c, r) = img(x + c, y + r);
  }
  return GrayImage(std::move(p));
}

}  // namespace monitor::vision
