#include "eqshadow/qsim/noise.hpp"

#include <cstdlib>
#include <sstream>

namespace eqshadow {

Pauli PauliDist::sample(Rng& rng) const {
  double u = uniform01(rng);
  for (int k = 0; k < 3; ++k) {
    u -= p[static_cast<std::size_t>(k)];
    if (u < 0.0) return static_cast<Pauli>(k);
  }
  return Pauli::Z;
}

GateClass classify(const Gate& g) {
  if (!g.two_qubit()) return GateClass::SingleQubit;
  return std::abs(g.q0 - g.q1) == 1 ? GateClass::NearestNeighbor : GateClass::LongRange;
}

bool NoiseModel::gate_noise() const {
  for (const auto& c : gate)
    if (!c.trivial()) return true;
  return false;
}

bool NoiseModel::trivial() const {
  return prep.trivial() && !gate_noise() && meas_flip <= 0.0 && injected_flip == 0;
}

std::string NoiseModel::describe() const {
  std::ostringstream os;
  os << "prep=" << prep.p[1] << "/" << prep.p[2] << "/" << prep.p[3];
  const char* names[3] = {"1q", "nn", "lr"};
  for (int k = 0; k < 3; ++k)
    os << " " << names[k] << "=" << gate[static_cast<std::size_t>(k)].rate << "x("
       << gate[static_cast<std::size_t>(k)].dist.p[1] << "," << gate[static_cast<std::size_t>(k)].dist.p[2] << ","
       << gate[static_cast<std::size_t>(k)].dist.p[3] << ")";
  os << " meas=" << meas_flip;
  return os.str();
}

NoiseModel gadgetize(const NoiseModel& m) {
  NoiseModel out = m;
  auto& lr = out.gate[static_cast<std::size_t>(GateClass::LongRange)];
  lr = ErrorChannel::dephasing(lr.rate);
  return out;
}

std::vector<ErrorEvent> sample_gate_errors(const Circuit& c, const NoiseModel& m, Rng& rng) {
  std::vector<ErrorEvent> ev;
  const auto& layers = c.layers();
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (const auto& g : layers[l]) {
      const auto& ch = m.gate[static_cast<std::size_t>(classify(g))];
      if (ch.trivial() || !bernoulli(rng, ch.rate)) continue;
      const int qs[2] = {g.q0, g.q1};
      for (int k = 0; k < (g.two_qubit() ? 2 : 1); ++k) {
        const Pauli p = ch.dist.sample(rng);
        if (p != Pauli::I) ev.push_back({static_cast<int>(l), qs[k], p});
      }
    }
  return ev;
}

std::pair<Bits, Bits> sample_prep_error(int n, const PauliDist& d, Rng& rng) {
  Bits x = 0, z = 0;
  if (d.trivial()) return {x, z};
  for (int q = 0; q < n; ++q) {
    const Pauli p = d.sample(rng);
    if (p == Pauli::X || p == Pauli::Y) x |= Bits{1} << q;
    if (p == Pauli::Z || p == Pauli::Y) z |= Bits{1} << q;
  }
  return {x, z};
}

Bits sample_meas_flips(int n, double eta, Rng& rng) {
  Bits f = 0;
  if (eta <= 0.0) return f;
  for (int q = 0; q < n; ++q)
    if (bernoulli(rng, eta)) f |= Bits{1} << q;
  return f;
}

void PauliFrame::add(int q, Pauli p) {
  if (p == Pauli::X || p == Pauli::Y) x ^= Bits{1} << q;
  if (p == Pauli::Z || p == Pauli::Y) z ^= Bits{1} << q;
}

void PauliFrame::conjugate(const Gate& g) {
  const Bits a = Bits{1} << g.q0;
  switch (g.kind) {
    case GateKind::H: {
      const Bits xa = x & a, za = z & a;
      x = (x & ~a) | za;
      z = (z & ~a) | xa;
      break;
    }
    case GateKind::S:
    case GateKind::Sdg:
      if (x & a) z ^= a;
      break;
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      break;
    case GateKind::CNOT: {
      const Bits b = Bits{1} << g.q1;
      if (x & a) x ^= b;
      if (z & b) z ^= a;
      break;
    }
    case GateKind::CZ: {
      const Bits b = Bits{1} << g.q1;
      const bool xa = x & a, xb = x & b;
      if (xa) z ^= b;
      if (xb) z ^= a;
      break;
    }
  }
}

Bits propagate_to_flips(const Circuit& c, const std::vector<ErrorEvent>& events) {
  if (events.empty()) return 0;
  const auto& layers = c.layers();
  PauliFrame f;
  std::size_t next = 0;
  // Events are grouped by layer in increasing order.
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const auto& g : layers[l]) f.conjugate(g);
    while (next < events.size() && events[next].layer == static_cast<int>(l)) {
      f.add(events[next].qubit, events[next].pauli);
      ++next;
    }
  }
  for (int q = 0; q < c.num_qubits(); ++q) {
    const Basis b = c.measurement(q);
    if (b == Basis::Y) f.conjugate(Gate{GateKind::Sdg, q});
    if (b == Basis::X || b == Basis::Y) f.conjugate(Gate{GateKind::H, q});
  }
  return f.x;
}

}  // namespace eqshadow
