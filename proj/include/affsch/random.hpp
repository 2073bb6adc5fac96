#pragma once

// Seed derivation and bounded draws. Everything here is specified bit for bit
// (SplitMix64 finaliser, FNV-1a, rejection sampling on mt19937_64) so sweeps
// reproduce across standard library implementations.

#include <cstdint>
#include <random>
#include <string_view>

namespace affsch {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// seed_{name,n,d} = sm(sm(sm(base ^ fnv1a(name)) ^ n) ^ d), sm = splitmix64.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view name, int n, int d) {
  std::uint64_t s = splitmix64(base ^ fnv1a(name));
  s = splitmix64(s ^ static_cast<std::uint64_t>(n));
  return splitmix64(s ^ static_cast<std::uint64_t>(d));
}

/// Uniform in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace affsch
