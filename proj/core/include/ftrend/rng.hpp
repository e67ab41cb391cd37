#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ftrend {

// SplitMix64 finalizer; full-period bijective scramble of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for sub-stream `index` of the stream rooted at `root`. Streams for
/// different indices are decorrelated, so any one of them can be regenerated
/// in isolation.
inline std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index) {
  return mix64(root ^ mix64(index));
}

/// Deterministic standard-normal generator. mt19937_64 is fully specified by
/// the standard and the Box-Muller transform below avoids the
/// implementation-defined std::normal_distribution, so output is reproducible
/// across platforms.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : eng_(seed) {}

  // uniform in (0, 1]
  double uniform() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ftrend
