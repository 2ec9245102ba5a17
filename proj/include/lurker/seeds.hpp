#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lurker {

// splitmix64; used to derive independent RNG streams from a master seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Mixes (master, salt, salt, ...) into one stream seed. Chaining keeps
// streams for different (cell, run) indices statistically independent.
inline uint64_t derive_seed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x8f3d1c2b5a7e9d41ULL;
  for (uint64_t p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

// Unbiased bounded sample in [0, n) (Lemire's multiply-shift with rejection).
// Hand-rolled so generated structures are stable across standard libraries.
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
  __uint128_t m = static_cast<__uint128_t>(rng()) * n;
  auto lo = static_cast<uint64_t>(m);
  if (lo < n) {
    const uint64_t threshold = -n % n;
    while (lo < threshold) {
      m = static_cast<__uint128_t>(rng()) * n;
      lo = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace lurker
