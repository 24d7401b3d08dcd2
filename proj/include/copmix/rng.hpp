#pragma once

#include <cstdint>
#include <random>

namespace copmix {

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic child-stream seed: mix64(seed + (index + 1) * golden64).
/// Used to give every replication (and every role inside a replication) its
/// own independent, reproducible stream regardless of thread schedule.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform draw in the open interval (0, 1) from a 64-bit engine.
inline double unit_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace copmix
