#pragma once

#include <cstdint>
#include <random>

namespace casctree {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a master seed and a stream index
/// (splitmix64 finalizer). Used to give each cascade / observation its own
/// reproducible stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform draw from [0, 1). Avoids std::uniform_real_distribution so that
/// streams are identical across standard library implementations.
inline double rng_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform draw from (0, 1].
inline double rng_prob(Rng& rng) { return 1.0 - rng_unit(rng); }

/// Unbiased uniform integer in [0, n). n must be positive.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

}  // namespace casctree
