#include "monitor/vision/mscn.hpp"

#include <algorithm>
#include <cmath>

#include "monitor/error.hpp"

namespace monitor::vision {
namespace {

std::vector<double> gaussian_kernel(int window, double sigma) {
  std::vector<double> k(window);
  const int half = window / 2;
  double sum = 0.0;
  for (int i = 0; i < window; ++i) {
    const double d = i - half;
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

}  // namespace

Plane gaussian_filter(const Plane& in, int window, double sigma) {
  const auto k = gaussian_kernel(window, sigma);
  const int half = window / 2;
  const int w = in.width, h = in.height;
  Plane tmp(w, h), out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < window; ++i) {
        const int xx = std::clamp(x + i - half, 0, w - 1);
        acc += k[i] * in(xx, y);
      }
      tmp(x, y) = acc;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < window; ++i) {
        const int yy = std::clamp(y + i - half, 0, h - 1);
        acc += k[i] * tmp(x, yy);
      }
      out(x, y) = acc;
    }
  }
  return out;
}

MscnField mscn_field(const Plane& image, const MscnOptions& options) {
  require(image.width >= options.window && image.height >= options.window,
          ErrorKind::kInvalidArgument, "image smaller than the MSCN window");
  const Plane mu = gaussian_filter(image, options.window, options.window_sigma);
  Plane sq(image.width, image.height);
  for (std::size_t i = 0; i < sq.size(); ++i) sq.data[i] = image.data[i] * image.data[i];
  const Plane mu_sq = gaussian_filter(sq, options.window, options.window_sigma);
  MscnField f{Plane(image.width, image.height), Plane(image.width, image.height)};
  for (std::size_t i = 0; i < image.size(); ++i) {
    const double sigma = std::sqrt(std::abs(mu_sq.data[i] - mu.data[i] * mu.data[i]));
    f.local_sigma.data[i] = sigma;
    f.coefficients.data[i] = (image.data[i] - mu.data[i]) / (sigma + options.stabilizer);
  }
  return f;
}

Plane mscn_transform(const GrayImage& img, const MscnOptions& options) {
  return mscn_field(img.plane(), options).coefficients;
}

Plane downsample_half(const Plane& in) {
  Plane out(in.width / 2, in.height / 2);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      out(x, y) = 0.25 * (in(2 * x, 2 * y) + in(2 * x + 1, 2 * y) + in(2 * x, 2 * y + 1) +
                          in(2 * x + 1, 2 * y + 1));
    }
  }
  return out;
}

std::vector<double> pairwise_products(const Plane& m, Orientation o) {
  std::vector<double> out;
  const int w = m.width, h = m.height;
  switch (o) {
    case Orientation::kHorizontal:
      out.reserve(static_cast<std::size_t>(w - 1) * h);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x + 1 < w; ++x) out.push_back(m(x, y) * m(x + 1, y));
      break;
    case Orientation::kVertical:
      out.reserve(static_cast<std::size_t>(w) * (h - 1));
      for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x < w; ++x) out.push_back(m(x, y) * m(x, y + 1));
      break;
    case Orientation::kMainDiagonal:
      out.reserve(static_cast<std::size_t>(w - 1) * (h - 1));
      for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x + 1 < w; ++x) out.push_back(m(x, y) * m(x + 1, y + 1));
      break;
    case Orientation::kAntiDiagonal:
      out.reserve(static_cast<std::size_t>(w - 1) * (h - 1));
      for (int y = 0; y + 1 < h; ++y)
        for (int x = 1; x < w; ++x) out.push_back(m(x, y) * m(x - 1, y + 1));
      break;
  }
  return out;
}

}  // namespace monitor::vision
