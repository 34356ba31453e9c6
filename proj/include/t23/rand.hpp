#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace t23 {

namespace detail {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Engine that depends only on (seed, index), so draw batches can be
/// produced in independent shards and still match the sequential run.
inline std::mt19937_64 make_rng(uint64_t seed, uint64_t index) {
  uint64_t state = seed;
  uint64_t a = detail::splitmix64(state);
  state ^= index + 0x9E3779B97F4A7C15ULL;
  uint64_t b = detail::splitmix64(state);
  return std::mt19937_64(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

/// Uniform draw from the closed unit disk by rejection from the square.
inline std::complex<double> uniform_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> side(-1.0, 1.0);
  while (true) {
    const double x = side(rng);
    const double y = side(rng);
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

}  // namespace t23
