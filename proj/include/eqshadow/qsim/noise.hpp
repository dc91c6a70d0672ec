#pragma once

#include <array>
#include <string>
#include <vector>

#include "eqshadow/eqcore/rng.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

// Single-qubit Pauli distribution over {I, X, Y, Z}.
struct PauliDist {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};

  static PauliDist identity() { return {}; }
  static PauliDist x_flip(double eta) { return {{1 - eta, eta, 0.0, 0.0}}; }
  static PauliDist z_flip(double eta) { return {{1 - eta, 0.0, 0.0, eta}}; }
  static PauliDist depolarizing(double eta) { return {{1 - eta, eta / 3, eta / 3, eta / 3}}; }
  static PauliDist uniform() { return {{0.25, 0.25, 0.25, 0.25}}; }
  static PauliDist dephasing_draw() { return {{0.5, 0.0, 0.0, 0.5}}; }

  bool trivial() const { return p[0] >= 1.0; }
  Pauli sample(Rng& rng) const;
};

// With probability `rate` the gate is faulty and each qubit it touches draws
// independently from `dist`.
struct ErrorChannel {
  double rate = 0.0;
  PauliDist dist;

  static ErrorChannel none() { return {}; }
  static ErrorChannel depolarizing(double eta) { return {eta, PauliDist::uniform()}; }
  static ErrorChannel dephasing(double eta) { return {eta, PauliDist::dephasing_draw()}; }
  bool trivial() const { return rate <= 0.0 || dist.trivial(); }
};

enum class GateClass { SingleQubit = 0, NearestNeighbor = 1, LongRange = 2 };
GateClass classify(const Gate& g);

struct NoiseModel {
  PauliDist prep;                      // on every qubit of each input copy
  std::array<ErrorChannel, 3> gate{};  // indexed by GateClass
  double meas_flip = 0.0;              // independent bit flip per outcome bit
  Bits injected_flip = 0;              // fixed XOR on measurement-circuit outcomes

  bool gate_noise() const;
  bool trivial() const;
  std::string describe() const;
};

// Long-range two-qubit faults replaced by dephasing at the same rate.
NoiseModel gadgetize(const NoiseModel& m);

struct ErrorEvent {
  int layer;  // inserted after this layer
  int qubit;
  Pauli pauli;
};

std::vector<ErrorEvent> sample_gate_errors(const Circuit& c, const NoiseModel& m, Rng& rng);

// Pauli acting on each qubit of an input copy, as (x, z) masks.
std::pair<Bits, Bits> sample_prep_error(int n, const PauliDist& d, Rng& rng);

Bits sample_meas_flips(int n, double eta, Rng& rng);

// Pauli frame (phases dropped).
struct PauliFrame {
  Bits x = 0;
  Bits z = 0;
  void add(int q, Pauli p);
  void conjugate(const Gate& g);
};

// Outcome bits flipped when the given faults are pushed through the rest of
// the circuit and its measurement (raw qubit order, before post-processing).
Bits propagate_to_flips(const Circuit& c, const std::vector<ErrorEvent>& events);

}  // namespace eqshadow
