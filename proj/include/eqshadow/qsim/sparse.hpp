#pragma once

#include <vector>

#include "eqshadow/eqcore/quadratic.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

// State stored as a list of basis terms; suited to GHZ/W-type inputs at
// large n.
class SparseState {
 public:
  SparseState() = default;
  SparseState(int n, std::vector<SparseTerm> terms);

  static SparseState ghz(int n);
  static SparseState w(int n);

  int num_qubits() const { return n_; }
  const std::vector<SparseTerm>& terms() const { return terms_; }

  void apply(const Gate& g);
  void apply(const Circuit& c);
  void apply_pauli(Bits x, Bits z);
  cplx amplitude(Bits x) const;
  double norm() const;

  // Z-basis sample.
  Bits sample(Rng& rng) const;

 private:
  void merge();

  int n_ = 0;
  std::vector<SparseTerm> terms_;
};

// Samples p with probability 2^{-n} |sum_j beta_j (-1)^{p.x_j}|^2, one qubit at
// a time in ascending order from prefix marginals. sum |beta_j|^2 must be 1.
Bits sample_hadamard_sparse(int n, const std::vector<SparseTerm>& beta, Rng& rng);

}  // namespace eqshadow
