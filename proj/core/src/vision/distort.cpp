#include "monitor/vision/distort.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "monitor/error.hpp"
#include "monitor/rng.hpp"
#include "monitor/vision/mscn.hpp"

namespace monitor::vision {
namespace {

cv::Mat to_u8(const GrayImage& img) {
  cv::Mat m(img.height(), img.width(), CV_8UC1);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      m.at<std::uint8_t>(y, x) = cv::saturate_cast<std::uint8_t>(std::lround(img(x, y)));
  return m;
}

GrayImage from_u8(const cv::Mat& m) {
  Plane p(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y)
    for (int x = 0; x < m.cols; ++x) p(x, y) = m.at<std::uint8_t>(y, x);
  return GrayImage(std::move(p));
}

}  // namespace

GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
  Rng rng(seed);
  Plane p = img.plane();
  for (double& v : p.data) v = std::clamp(v + sigma * rng.normal(), 0.0, 255.0);
  return GrayImage(std::move(p));
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  const int window = 2 * static_cast<int>(std::ceil(3.0 * sigma)) + 1;
  return GrayImage(gaussian_filter(img.plane(), window, sigma));
}

GrayImage median_blur(const GrayImage& img, int ksize) {
  require(ksize >= 3 && ksize % 2 == 1, ErrorKind::kInvalidArgument, "median kernel must be odd and >= 3");
  cv::Mat out;
  cv::medianBlur(to_u8(img), out, ksize);
  return from_u8(out);
}

GrayImage jpeg_recompress(const GrayImage& img, int quality) {
  require(quality >= 1 && quality <= 100, ErrorKind::kInvalidArgument, "JPEG quality must be 1..100");
  std::vector<std::uint8_t> buffer;
  require(cv::imencode(".jpg", to_u8(img), buffer, {cv::IMWRITE_JPEG_QUALITY, quality}),
          ErrorKind::kIo, "JPEG encoding failed");
  cv::Mat decoded = cv::imdecode(buffer, cv::IMREAD_GRAYSCALE);
  require(!decoded.empty(), ErrorKind::kIo, "JPEG decoding failed");
  return from_u8(decoded);
}

}  // namespace monitor::vision
