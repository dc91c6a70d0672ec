#pragma once

#include <cstdint>
#include <random>

namespace eqshadow {

using Rng = std::mt19937_64;

// Bit-exact helpers; the standard distributions are implementation defined.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

inline std::uint64_t random_word(Rng& rng, int nbits) {
  std::uint64_t w = rng();
  return nbits >= 64 ? w : (w & ((std::uint64_t{1} << nbits) - 1));
}

// Uniform on [0, bound). bound must be nonzero.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

std::uint64_t mix64(std::uint64_t x);

// Seed for sample `index` of group `group`. Injective in (group, index) for a
// fixed seed and per_group size.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t group,
                          std::uint64_t index, std::uint64_t per_group);

inline Rng stream_rng(std::uint64_t seed, std::uint64_t group,
                      std::uint64_t index, std::uint64_t per_group) {
  return Rng(stream_seed(seed, group, index, per_group));
}

}  // namespace eqshadow
