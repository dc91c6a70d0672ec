#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqshadow/eqcore/bits.hpp"

namespace eqshadow {

enum class GateKind { H, S, Sdg, X, Y, Z, CZ, CNOT };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;  // target for CNOT, partner for CZ

  bool two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CNOT; }
  bool operator==(const Gate&) const = default;
};

std::string gate_name(GateKind k);

enum class Basis { None, Z, X, Y };

using Layer = std::vector<Gate>;

// Layered circuit followed by an optional terminal measurement. Gates inside a
// layer act on disjoint qubits. The reported outcome is the raw outcome XOR
// `flips`, then bit-reversed when `reverse_outcome` is set.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n);

  int num_qubits() const { return n_; }
  const std::vector<Layer>& layers() const { return layers_; }

  // Throws if supports overlap or indices are out of range.
  void add_layer(Layer layer);
  void append(const Circuit& other);

  void set_measurement(int q, Basis b);
  void measure_all(Basis b);
  Basis measurement(int q) const { return meas_[static_cast<std::size_t>(q)]; }
  bool has_measurement() const;

  Bits flips() const { return flips_; }
  void set_flips(Bits f) { flips_ = f; }
  bool reverse_outcome() const { return reverse_; }
  void set_reverse_outcome(bool r) { reverse_ = r; }

  Bits postprocess(Bits raw) const {
    const Bits v = raw ^ flips_;
    return reverse_ ? reverse_bits(v, n_) : v;
  }

  // Inverse of the unitary part (measurement settings are dropped).
  Circuit inverse() const;

  // Text form: one gate per line ("H 3", "CZ 0 5", "CNOT 2 3", "MEAS X 1"),
  // layers separated by "---". Optional directives: "QUBITS n", "FLIP q",
  // "REVERSE". Lines starting with '#' are ignored.
  std::string to_text() const;
  static Circuit parse(std::string_view text);

 private:
  int n_ = 0;
  std::vector<Layer> layers_;
  std::vector<Basis> meas_;
  Bits flips_ = 0;
  bool reverse_ = false;
};

}  // namespace eqshadow
