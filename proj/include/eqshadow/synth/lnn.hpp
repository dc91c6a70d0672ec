#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eqshadow/eqcore/label.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

// Contiguous XOR x_first ^ ... ^ x_last, 1-based positions.
struct Interval {
  int first;
  int last;
  auto operator<=>(const Interval&) const = default;
};

struct LnnPatterns {
  std::vector<int> pj;  // left ends
  std::vector<int> pk;  // right ends
  // Wire i (1-based) after t >= 1 blocks holds [pj[offset_j(t)+i-1], pk[offset_k(t)+i-1]].
  int offset_j(int t) const;
  int offset_k(int t) const { return 2 * (t - 1); }
  int n = 0;
};

LnnPatterns lnn_patterns(int n);

// Nearest-neighbour CNOT layers (2n+2 of them, empty ones kept) whose
// composition reverses the qubit order.
std::vector<Layer> lnn_cnot_layers(int n);

// Number of four-layer blocks after which phases are inserted: blocks
// 0..lnn_blocks(n) inclusive.
int lnn_blocks(int n);

// (block t, wire) holding each interval, taken from the first block where it
// appears. Wires are 1-based.
std::map<Interval, std::pair<int, int>> lnn_interval_slots(int n);

// Prefix parities y_a = x_1 ^ ... ^ x_a. A term is i^{exponent (y_a ^ y_b)},
// with a = 0 meaning the single y_b.
struct YTerm {
  int a;
  int b;
  int exponent;
  Interval interval() const { return {a + 1, b}; }
};

// (-1)^{x_mu x_nu} as a product of y-terms, 1-based mu < nu.
std::vector<YTerm> decompose_cz_phase(int mu, int nu);

// Nearest-neighbour circuit U with U|x> = i^{q_A(x)} |reverse(x)>; the
// reversal is recorded on the circuit as outcome reversal.
Circuit lnn_synthesize(const EqLabel& a);

// LNN version of the measurement circuit: conjugate diagonal, H layer, Z
// measurement, outcome reversal.
Circuit lnn_measurement_circuit(const EqLabel& a);

}  // namespace eqshadow
