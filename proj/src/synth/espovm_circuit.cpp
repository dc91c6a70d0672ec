#include "eqshadow/synth/espovm_circuit.hpp"

#include <algorithm>

#include "eqshadow/synth/edge_coloring.hpp"

namespace eqshadow {

std::vector<Layer> cz_layers(const EqLabel& a) {
  std::vector<Layer> out;
  for (const auto& colour : edge_color_layers(a.num_qubits(), a.edges())) {
    Layer l;
    for (auto [i, j] : colour) l.push_back({GateKind::CZ, i, j});
    out.push_back(std::move(l));
  }
  return out;
}

Circuit espovm_measurement_circuit(const EqLabel& a, MeasurementForm form) {
  const int n = a.num_qubits();
  Circuit c(n);
  for (auto& l : cz_layers(a)) c.add_layer(std::move(l));
  if (form == MeasurementForm::Standard) {
    Layer phases;
    for (int q = 0; q < n; ++q) {
      switch (a.phase_diag_coefficient(q)) {
        case 1: phases.push_back({GateKind::Sdg, q}); break;
        case 2: phases.push_back({GateKind::Z, q}); break;
        case 3: phases.push_back({GateKind::S, q}); break;
        default: break;
      }
    }
    if (!phases.empty()) c.add_layer(std::move(phases));
    Layer h;
    for (int q = 0; q < n; ++q) h.push_back({GateKind::H, q});
    c.add_layer(std::move(h));
    c.measure_all(Basis::Z);
    return c;
  }
  Bits flips = 0;
  for (int q = 0; q < n; ++q) {
    const int d = a.phase_diag_coefficient(q);
    c.set_measurement(q, d % 2 ? Basis::Y : Basis::X);
    if (d >= 2) flips |= Bits{1} << q;
  }
  c.set_flips(flips);
  return c;
}

Circuit schedule_asap(int n, const std::vector<Gate>& gates) {
  std::vector<int> ready(static_cast<std::size_t>(n), 0);
  std::vector<Layer> layers;
  for (const auto& g : gates) {
    int at = ready[static_cast<std::size_t>(g.q0)];
    if (g.two_qubit()) at = std::max(at, ready[static_cast<std::size_t>(g.q1)]);
    if (static_cast<int>(layers.size()) <= at) layers.resize(static_cast<std::size_t>(at + 1));
    layers[static_cast<std::size_t>(at)].push_back(g);
    ready[static_cast<std::size_t>(g.q0)] = at + 1;
    if (g.two_qubit()) ready[static_cast<std::size_t>(g.q1)] = at + 1;
  }
  Circuit c(n);
  for (auto& l : layers) c.add_layer(std::move(l));
  return c;
}

}  // namespace eqshadow
