#include "monitor/vision/piqe.hpp"

#include <algorithm>
#include <cmath>

#include "monitor/error.hpp"
#include "monitor/vision/mscn.hpp"

namespace monitor::vision {
namespace {

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  int n = 0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  double variance() const {
    if (n == 0) return 0.0;
    const double m = sum / n;
    return std::max(0.0, sum_sq / n - m * m);
  }
  double stddev() const { return std::sqrt(variance()); }
};

double run_stddev(const double* first, int stride, int len) {
  Moments m;
  for (int i = 0; i < len; ++i) m.add(first[i * stride]);
  return m.stddev();
}

// Some run along one of the four block edges is nearly flat.
bool has_flat_edge(const Plane& mscn, int x0, int y0, const PiqeOptions& o) {
  const int b = o.block;
  const int w = mscn.width;
  const double* base = mscn.data.data();
  for (int start = 0; start + o.edge_run <= b; ++start) {
    const double* top = base + static_cast<std::size_t>(y0) * w + x0 + start;
    const double* bottom = base + static_cast<std::size_t>(y0 + b - 1) * w + x0 + start;
    const double* left = base + static_cast<std::size_t>(y0 + start) * w + x0;
    const double* right = base + static_cast<std::size_t>(y0 + start) * w + x0 + b - 1;
    if (run_stddev(top, 1, o.edge_run) < o.edge_threshold ||
        run_stddev(bottom, 1, o.edge_run) < o.edge_threshold ||
        run_stddev(left, w, o.edge_run) < o.edge_threshold ||
        run_stddev(right, w, o.edge_run) < o.edge_threshold)
      return true;
  }
  return false;
}

}  // namespace

PiqeResult piqe(const GrayImage& img, const PiqeOptions& o) {
  require(o.block >= o.edge_run && o.block <= img.width() && o.block <= img.height(),
          ErrorKind::kInvalidArgument, "image smaller than one PIQE block");
  const Plane mscn = mscn_transform(img);
  const int bx = img.width() / o.block;
  const int by = img.height() / o.block;
  // Centre region: the middle half of the block along each axis.
  const int c0 = o.block / 4, c1 = o.block - o.block / 4;

  PiqeResult r;
  double distortion = 0.0;
  for (int j = 0; j < by; ++j) {
    for (int i = 0; i < bx; ++i) {
      const int x0 = i * o.block, y0 = j * o.block;
      Moments all, centre, surround;
      for (int y = 0; y < o.block; ++y) {
        for (int x = 0; x < o.block; ++x) {
          const double v = mscn(x0 + x, y0 + y);
          all.add(v);
          const bool inner = x >= c0 && x < c1 && y >= c0 && y < c1;
          (inner ? centre : surround).add(v);
        }
      }
      const double var = all.variance();
      if (var < o.activity_threshold) continue;
      ++r.active_blocks;

      const bool artifact = has_flat_edge(mscn, x0, y0, o);
      const double sc = centre.stddev(), ss = surround.stddev();
      const double rel = std::abs(sc - ss) / std::max(std::max(sc, ss), 1e-12);
      // Noise spreads evenly over the block, so centre and surround look alike.
      const bool noise = rel < o.noise_threshold;

      double d = 0.0;
      if (artifact) {
        d = 1.0;
        ++r.artifact_blocks;
      }
      if (noise) {
        d = std::max(d, std::min(var / o.noise_variance_scale, 1.0));
        ++r.noise_blocks;
      }
      distortion += d;
    }
  }
  if (r.active_blocks == 0) {
    r.uniform = true;
    r.score = 100.0;
    return r;
  }
  r.score = std::clamp(100.0 * (distortion + 1.0) / (r.active_blocks + 1.0), 0.0, 100.0);
  return r;
}

}  // namespace monitor::vision
