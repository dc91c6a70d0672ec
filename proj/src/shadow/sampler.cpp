#include "eqshadow/shadow/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "eqshadow/synth/espovm_circuit.hpp"
#include "eqshadow/synth/lnn.hpp"

namespace eqshadow {

int num_qubits(const InputState& s) {
  return std::visit([](const auto& v) { return v.num_qubits(); }, s);
}

const char* backend_name(const InputState& s) {
  switch (s.index()) {
    case 0: return "dense";
    case 1: return "sparse";
    default: return "tableau";
  }
}

namespace {

Circuit measurement_circuit(const EqLabel& a, Synthesis syn) {
  return syn == Synthesis::Lnn ? lnn_measurement_circuit(a) : espovm_measurement_circuit(a);
}

// Ideal outcome p with prob |<phi_{A+2D(p)}|psi>|^2 (eq) or |<phi_{A+D(p)}|psi>|^2 (req).
Bits ideal_outcome(const DenseState& psi, const EqLabel& a, Bits px, Bits pz, Rng& rng) {
  DenseState s = psi;
  if (px | pz) s.apply_pauli(px, pz);
  auto& v = s.amplitudes();
  for (std::size_t x = 0; x < v.size(); ++x) v[x] *= ipow(-a.phase(x));
  walsh_hadamard(v);
  return sample_index(probabilities_of(v), rng);
}

Bits ideal_outcome(const SparseState& psi, const EqLabel& a, Bits px, Bits pz, Rng& rng) {
  SparseState s = psi;
  if (px | pz) s.apply_pauli(px, pz);
  std::vector<SparseTerm> beta = s.terms();
  for (auto& t : beta) t.amp *= ipow(-a.phase(t.basis));
  return sample_hadamard_sparse(a.num_qubits(), beta, rng);
}

Bits ideal_outcome(const Tableau& psi, const EqLabel& a, Bits px, Bits pz, Rng& rng) {
  Tableau s = psi;
  if (px | pz) s.apply_pauli(px, pz);
  const Circuit c = espovm_measurement_circuit(a);
  s.apply(c);
  return c.postprocess(s.measure_all(rng));
}

}  // namespace

EspovmDraw sample_espovm(const InputState& psi, Scheme scheme, const SamplerSettings& cfg, Rng& rng) {
  const int n = num_qubits(psi);
  const EqLabel a = EqLabel::random(scheme, n, rng);
  const auto [px, pz] = sample_prep_error(n, cfg.noise.prep, rng);
  Bits p = std::visit([&](const auto& s) { return ideal_outcome(s, a, px, pz, rng); }, psi);
  if (cfg.noise.gate_noise()) {
    const Circuit c = measurement_circuit(a, cfg.synthesis);
    const Bits f = propagate_to_flips(c, sample_gate_errors(c, cfg.noise, rng));
    p ^= c.reverse_outcome() ? reverse_bits(f, n) : f;
  }
  if (cfg.noise.meas_flip > 0.0) p ^= sample_meas_flips(n, cfg.noise.meas_flip, rng);
  p ^= cfg.noise.injected_flip & low_mask(n);
  return {a.with_outcome(p), p};
}

Bits sample_computational(const InputState& psi, const SamplerSettings& cfg, Rng& rng) {
  const int n = num_qubits(psi);
  const Bits px = sample_prep_error(n, cfg.noise.prep, rng).first;
  const Bits p = std::visit(
      [&](const auto& s) -> Bits {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Tableau>) {
          Tableau t = s;
          return t.measure_all(rng);
        } else {
          return s.sample(rng);
        }
      },
      psi);
  return p ^ px;
}

}  // namespace eqshadow
