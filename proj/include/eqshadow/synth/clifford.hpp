#pragma once

#include "eqshadow/eqcore/rng.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

// Uniformly random Clifford (modulo global phase) as a circuit
//   F2 -> qubit permutation -> Hadamard layer -> F1 -> Pauli layer,
// where each F is a Hadamard-free block: S and CZ from a random symmetric
// matrix, then CNOTs realising a random unit lower-triangular map.
struct CliffordSample {
  Circuit circuit;
  // Layers [0, quantum_layers) form the F2 block; the rest commutes into
  // classical post-processing ahead of a Z measurement (after the H layer).
  int hf_layers = 0;
  int h_layer_index = -1;  // -1 when no Hadamards were drawn
};

CliffordSample sample_clifford(int n, Rng& rng);

// Hadamard mask and permutation drawn from the quantum Mallows law.
struct MallowsSample {
  Bits hadamards = 0;
  std::vector<int> perm;
};
MallowsSample sample_quantum_mallows(int n, Rng& rng);

}  // namespace eqshadow
