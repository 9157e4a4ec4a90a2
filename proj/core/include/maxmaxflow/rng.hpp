#pragma once

#include <cstdint>
#include <random>

namespace maxmaxflow {

// mt19937_64 with portable integer mapping, so a seed gives the same
// instances regardless of the standard library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 engine_;
};

// Derives independent child seeds (splitmix64 finaliser).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace maxmaxflow
