#pragma once

// Counter-based SplitMix64 stream. Replication i of a run seeded with `seed`
// always sees the same sequence, independent of which thread draws it or in
// what order, and the generator is pure 64-bit integer arithmetic so results
// are identical across platforms.

#include <cstdint>

namespace mediagame {

class ReplicationRng {
 public:
  ReplicationRng(std::uint64_t seed, std::uint64_t replication)
      : state_(mix(seed ^ mix(replication + kGamma))) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace mediagame
