#pragma once

#include <cstdint>
#include <random>

#include "qi/scalar.hpp"

namespace qi {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi] by modulo reduction; identical on every platform.
inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

inline Scalar random_scalar(Rng& rng, const Field& f, long long bound) {
  return f.from_int(uniform_int(rng, -bound, bound));
}

/// splitmix64 finalizer, used to derive independent per-trial seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qi
