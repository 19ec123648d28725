#pragma once

#include <cstdint>

namespace kakeya {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based derivation: same (seed, stream) always yields the same word.
inline std::uint64_t rng_derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

inline int rng_coin(std::uint64_t seed, std::uint64_t stream) {
  return static_cast<int>(rng_derive(seed, stream) & 1);
}

inline double rng_uniform01(std::uint64_t seed, std::uint64_t stream) {
  return static_cast<double>(rng_derive(seed, stream) >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n).
inline std::uint64_t rng_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t n) {
  return rng_derive(seed, stream) % n;
}

}  // namespace kakeya
