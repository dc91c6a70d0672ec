#include "eqshadow/eqcore/rng.hpp"

namespace eqshadow {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t group,
                          std::uint64_t index, std::uint64_t per_group) {
  // mix64 is a bijection, so distinct linear indices give distinct seeds.
  const std::uint64_t linear = group * per_group + index;
  return mix64(linear ^ mix64(seed ^ 0x5851f42d4c957f2dULL));
}

}  // namespace eqshadow
