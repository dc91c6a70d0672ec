#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqshadow {

// Computational basis strings. Bit i of the word is qubit i.
using Bits = std::uint64_t;

inline constexpr int kMaxQubits = 64;

inline int parity(Bits b) { return std::popcount(b) & 1; }
inline int weight(Bits b) { return std::popcount(b); }
inline int bit(Bits b, int i) { return static_cast<int>((b >> i) & 1u); }

inline Bits low_mask(int n) {
  return n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
}

inline void require_qubits(int n, int cap = kMaxQubits) {
  if (n < 1 || n > cap) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside [1, " + std::to_string(cap) + "]");
  }
}

// Reverses the first n bits.
inline Bits reverse_bits(Bits b, int n) {
  Bits r = 0;
  for (int i = 0; i < n; ++i) r |= static_cast<Bits>(bit(b, i)) << (n - 1 - i);
  return r;
}

// String with qubit 0 first.
inline std::string bits_to_string(Bits b, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = bit(b, i) ? '1' : '0';
  return s;
}

}  // namespace eqshadow
