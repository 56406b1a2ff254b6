#pragma once

#include <cstdint>

#include "pcg/pc_model.hpp"

namespace pcg {

// splitmix64: a tiny, platform-independent 64-bit generator.  Every sampled
// mode records its seed so runs can be reproduced exactly.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) by rejection; bound must be positive.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = -bound % bound;  // 2^64 mod bound
    while (true) {
      uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }
};

// Uniformly random exponent vector.
inline Element random_element(const PcPresentation& p, SplitMix64& rng) {
  Element e = p.identity();
  for (int32_t i = 1; i <= p.size(); ++i)
    e.set_exp(i, static_cast<int32_t>(
                     rng.next_below(static_cast<uint64_t>(p.relative_order(i)))));
  return e;
}

}  // namespace pcg
