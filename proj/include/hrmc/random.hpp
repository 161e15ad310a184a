#pragma once

#include <cstdint>
#include <random>

namespace hrmc {

/// Reproducible random stream used by every sampling routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Independent substreams are keyed by (seed, stream index) through
/// a SplitMix64 mix, so a trial's randomness depends only on its index and
/// never on which thread runs it. Bounded draws use rejection sampling
/// instead of std::uniform_int_distribution, whose output is
/// implementation-defined.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hrmc
