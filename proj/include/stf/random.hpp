#pragma once

// Portable seeded randomness. std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, so seeded outputs go through this.

#include <cstdint>
#include <stdexcept>

namespace stf {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] by rejection sampling.
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("SplitMix64::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for the counter-th candidate drawn under a seed.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 mix(seed ^ (counter * 0xd1b54a32d192ed03ULL));
  return SplitMix64(mix.next() ^ counter);
}

}  // namespace stf
