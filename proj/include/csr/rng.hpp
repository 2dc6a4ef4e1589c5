#pragma once

#include <cstdint>
#include <random>

namespace csr {

// Deterministic helpers on top of mt19937_64. We avoid the std distribution
// classes so that seeded runs produce the same byte stream regardless of the
// standard library in use.

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift reduction.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<__uint128_t>(rng()) * static_cast<__uint128_t>(bound)) >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// splitmix64 finalizer; used to derive independent sub-seeds from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace csr
