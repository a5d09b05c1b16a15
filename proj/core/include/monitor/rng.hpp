#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace monitor {

/// Seeded generator with platform-independent draws.
///
/// The standard distributions are implementation-defined, so two standard
/// libraries can produce different splits from the same seed. Every random
/// decision in the pipeline goes through this class instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be > 0.
  std::size_t below(std::size_t bound);
  /// Uniform real in [0, 1).
  double uniform();
  double normal();
  double laplace(double scale = 1.0);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  /// Derives an independent child seed; used to give each tree or fold its own stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace monitor
