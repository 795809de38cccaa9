#pragma once

#include <cstdint>
#include <random>

namespace tmcap {

// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// The generator for replication r is a pure function of (seed, r), so
// replications can run in any order or concurrently and still reproduce the
// same draws. mt19937_64 is fully specified by the standard, which keeps
// outputs identical across platforms.
inline std::mt19937_64 replication_stream(std::uint64_t seed, std::uint64_t replication) {
  const std::uint64_t stream_seed =
      mix64(mix64(seed) ^ (0x9E3779B97F4A7C15ULL * (replication + 1)));
  return std::mt19937_64(stream_seed);
}

// Uniform double in [0, 1) with 53 random mantissa bits. Hand-rolled because
// std::uniform_real_distribution is not bit-reproducible across standard
// library implementations.
inline double uniform01(std::mt19937_64& engine) noexcept {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace tmcap
