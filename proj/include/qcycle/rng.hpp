#pragma once

#include <cstdint>

#include "qcycle/errors.hpp"

namespace qcycle {

// SplitMix64: a portable 64-bit generator with fixed published constants
// (increment 0x9E3779B97F4A7C15, mix multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB). Every randomized operation in the library draws from
// this generator so that identical seeds give identical results on any
// platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform draw in [0, bound) by rejection sampling; exactly uniform.
  uint64_t next_below(uint64_t bound) {
    if (bound == 0) throw invalid_parameter("next_below: bound must be > 0");
    const uint64_t rem = (0ULL - bound) % bound;  // 2^64 mod bound
    const uint64_t cutoff = 0ULL - rem;           // largest multiple of bound
    for (;;) {
      const uint64_t r = next();
      if (cutoff == 0 || r < cutoff) return r % bound;
    }
  }

  // Seed for an independent child stream, e.g. one stream per trial index.
  static uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

}  // namespace qcycle
