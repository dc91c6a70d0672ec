#include "eqshadow/shadow/clifford_baseline.hpp"

#include <cmath>
#include <stdexcept>

namespace eqshadow {

namespace {

Bits ideal_outcome(const InputState& psi, const Circuit& c, Bits px, Bits pz, Rng& rng) {
  if (const auto* t = std::get_if<Tableau>(&psi)) {
    Tableau s = *t;
    s.apply_pauli(px, pz);
    s.apply(c);
    return s.measure_all(rng);
  }
  DenseState s;
  if (const auto* d = std::get_if<DenseState>(&psi)) {
    s = *d;
  } else {
    const auto& sp = std::get<SparseState>(psi);
    require_qubits(sp.num_qubits(), dense_qubit_cap());
    std::vector<cplx> amps(std::size_t{1} << sp.num_qubits(), 0.0);
    for (const auto& t : sp.terms()) amps[t.basis] = t.amp;
    s = DenseState::from_amplitudes(std::move(amps));
  }
  s.apply_pauli(px, pz);
  s.apply(c);
  return s.sample(rng);
}

}  // namespace

CliffordDraw sample_clifford_shadow(const InputState& psi, const SamplerSettings& cfg, Rng& rng) {
  const int n = num_qubits(psi);
  CliffordDraw d{sample_clifford(n, rng), 0};
  const Circuit& c = d.unitary.circuit;
  const auto [px, pz] = sample_prep_error(n, cfg.noise.prep, rng);
  Bits p = ideal_outcome(psi, c, px, pz, rng);
  if (cfg.noise.gate_noise()) {
    auto events = sample_gate_errors(c, cfg.noise, rng);
    std::erase_if(events, [&](const ErrorEvent& e) { return e.layer >= d.unitary.hf_layers; });
    p ^= propagate_to_flips(c, events);
  }
  if (cfg.noise.meas_flip > 0.0) p ^= sample_meas_flips(n, cfg.noise.meas_flip, rng);
  p ^= cfg.noise.injected_flip & low_mask(n);
  d.outcome = p;
  return d;
}

double clifford_estimate(const CliffordDraw& d, const Observable& o) {
  const int n = o.num_qubits();
  if (d.unitary.circuit.num_qubits() != n) throw std::invalid_argument("observable size mismatch");
  require_qubits(n, dense_qubit_cap());
  DenseState v(n);
  v.apply_pauli(d.outcome, 0);
  v.apply(d.unitary.circuit.inverse());
  return (std::ldexp(1.0, n) + 1.0) * o.state_expectation(v.amplitudes()) - o.trace();
}

}  // namespace eqshadow
