#pragma once

#include <cstdint>

#include "liedeg/scalar.hpp"

namespace liedeg {

/// splitmix64: tiny deterministic PRNG, identical across platforms. Seeded
/// runs of the tools are bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// uniform integer in [lo, hi]
  long intrange(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// child generator with decorrelated seed
  Rng fork(std::uint64_t stream) {
    Rng child(state_ ^ (0xa0761d6478bd642fULL * (stream + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace liedeg
