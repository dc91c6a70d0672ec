#pragma once

#include <vector>

#include "eqshadow/eqcore/label.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

// Qubit limit for statevector simulation; EQSHADOW_DENSE_CAP overrides 12.
int dense_qubit_cap();

class DenseState {
 public:
  DenseState() = default;
  explicit DenseState(int n);  // |0...0>
  static DenseState from_amplitudes(std::vector<cplx> amps);

  int num_qubits() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }

  void apply(const Gate& g);
  void apply(const Circuit& c);  // gates only
  void apply_pauli(Bits x, Bits z);
  // Rotates so that a Z measurement realises the circuit's measurement bases.
  void rotate_to_measurement(const Circuit& c);

  double norm() const;
  std::vector<double> probabilities() const;
  Bits sample(Rng& rng) const;

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

// Runs the circuit and its terminal measurement on a copy of psi; returns the
// post-processed outcome.
Bits sample_circuit(const Circuit& c, DenseState psi, Rng& rng);

// Exact law of the post-processed outcome.
std::vector<double> outcome_distribution(const Circuit& c, DenseState psi);

// In-place Walsh-Hadamard transform (unnormalised).
void walsh_hadamard(std::vector<cplx>& v);

std::vector<double> probabilities_of(const std::vector<cplx>& v);
Bits sample_index(const std::vector<double>& probs, Rng& rng);

}  // namespace eqshadow
