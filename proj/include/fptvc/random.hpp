#pragma once

#include <cstdint>
#include <random>

namespace fptvc {

// Seeded source for the instance generators.
//
// The engine is std::mt19937_64 (its output sequence is fixed by the C++
// standard), seeded directly with the 64-bit seed. Bounded draws use
// rejection sampling on the raw 64-bit output rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Values below `threshold` would bias the modulo; 2^64 mod bound of them.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fptvc
