#pragma once

#include <cstdint>

namespace gkc {

/// splitmix64. Small, fast, and good enough for importance sampling; the
/// distributional checks in the verify suites exercise it directly.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0, 1): (x >> 11 + 1/2) * 2^-53.
  double next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
};

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Stream for one fixed-size block of draws. Streams depend only on
/// (seed, block), so results merged in block order are identical no matter
/// how blocks are scheduled across threads.
inline SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block) {
  return SplitMix64{mix64(mix64(seed) ^ mix64(~block))};
}

}  // namespace gkc
