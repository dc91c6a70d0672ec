#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqshadow/eqcore/label.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

// Hermitian Pauli (-1)^sign i^{|x&z|} X^x Z^z.
struct PauliString {
  Bits x = 0;
  Bits z = 0;
  int sign = 0;
};

// Affine set offset + span(basis); every element equally likely.
struct AffineSupport {
  Bits offset = 0;
  std::vector<Bits> basis;
};

// Stabilizer tableau with destabilizers (rows 0..n-1) and stabilizers
// (rows n..2n-1). Started from |0..0>, row i holds U X_i U^dag and row n+i
// holds U Z_i U^dag, so the tableau also identifies the Clifford U.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(int n);

  int num_qubits() const { return n_; }

  void apply(const Gate& g);
  void apply(const Circuit& c);
  void apply_pauli(Bits x, Bits z);

  PauliString destabilizer(int i) const { return row(i); }
  PauliString stabilizer(int i) const { return row(n_ + i); }

  // Measures a Hermitian Pauli. A random outcome consumes one draw from rng,
  // or uses `forced` when given. Returns the outcome bit and whether it was
  // random.
  std::pair<int, bool> measure(const PauliString& p, Rng* rng, std::optional<int> forced = std::nullopt);
  int measure_z(int q, Rng& rng) { return measure(PauliString{0, Bits{1} << q, 0}, &rng).first; }
  // All qubits in ascending order.
  Bits measure_all(Rng& rng);

  AffineSupport z_support() const;
  // |<this|other>|^2
  double overlap_sq(const Tableau& other) const;
  // Amplitudes up to a global phase (n <= dense cap).
  std::vector<cplx> to_statevector() const;

  // Row data with signs; equal keys mean equal Clifford up to global phase.
  std::string key() const;

 private:
  PauliString row(int i) const { return {x_[static_cast<std::size_t>(i)], z_[static_cast<std::size_t>(i)], r_[static_cast<std::size_t>(i)]}; }
  void set_row(int i, const PauliString& p);
  void rowsum(int h, int i);
  bool anticommutes(int i, const PauliString& p) const;

  int n_ = 0;
  std::vector<Bits> x_, z_;
  std::vector<std::uint8_t> r_;
};

Tableau tableau_of(const EqLabel& a);  // |phi_A>

}  // namespace eqshadow
