#pragma once

#include <cstdint>

namespace heaplab {

/// SplitMix64: seedable, splittable counter-based generator. Draw i is a
/// pure function of (seed, i), so a (seed, draw-counter) pair replays any
/// run exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Signed uniform in [lo, hi], inclusive.
  std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(span == 0 ? next_u64() : next_below(span));
  }

  /// Derive an independent stream.
  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace heaplab
