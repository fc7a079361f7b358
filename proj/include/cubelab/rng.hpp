#pragma once

#include <cstdint>

namespace cubelab {

// SplitMix64: the project-wide PRNG. Seedable, and splittable in the sense
// that independent streams are derived by mixing a stream index into the
// seed; every worker (or every Monte-Carlo sample) gets its own stream, so
// results do not depend on how work is partitioned.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Derived stream: a fresh generator whose seed mixes `index` into this
  // generator's seed without advancing it.
  SplitMix64 split(uint64_t index) const {
    SplitMix64 mixer(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return SplitMix64(mixer.next());
  }

  // Uniform index in [0, n) by the multiply-shift method (rejection-free).
  uint32_t uniform_index(uint32_t n) {
    return static_cast<uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [-1, 1).
  double uniform_signed() { return 2.0 * uniform_double() - 1.0; }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace cubelab
