#ifndef GLYPHNET_RNG_HPP
#define GLYPHNET_RNG_HPP

#include <cstdint>

namespace glyphnet {

/// splitmix64 stream. Output is identical on every platform for a given seed.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1) with 53 bits of precision: (next_u64 >> 11) * 2^-53.
  double next_unit() noexcept;

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_unit(); }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// The splitmix64 output function applied to a single word.
std::uint64_t splitmix64_scramble(std::uint64_t z) noexcept;

/// Derives an independent stream seed: the (index + 1)-th output of a
/// splitmix64 stream seeded with `seed`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace glyphnet

#endif  // GLYPHNET_RNG_HPP
