#pragma once

#include <cstdint>
#include <limits>

namespace gaprec {

/// SplitMix64 (Steele, Lea & Vigna): 64-bit state advanced by the golden
/// gamma, output finalized with Stafford's mix13. Tiny state, bit-exact on
/// every platform, which is what the reproducibility contract needs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

 private:
  std::uint64_t state_;
};

/// Seed of the sub-stream for one walk: mix13(base XOR (index+1)*gamma).
/// Every walk owns its stream, so serial and worker-partitioned runs visit
/// identical paths no matter how the index range is split.
inline std::uint64_t sub_seed(std::uint64_t base, std::uint64_t walk_index) {
  return SplitMix64::mix(base ^ ((walk_index + 1) * SplitMix64::kGamma));
}

/// Uniform draw from [0, bound) by rejection from the top of the 64-bit
/// range; unbiased for every bound >= 1.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (max64 % bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng.next();
    if (overhang == 0 || x <= max64 - overhang) return x % bound;
  }
}

}  // namespace gaprec
