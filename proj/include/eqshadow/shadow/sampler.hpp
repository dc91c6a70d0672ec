#pragma once

#include <variant>

#include "eqshadow/qsim/dense.hpp"
#include "eqshadow/qsim/noise.hpp"
#include "eqshadow/qsim/sparse.hpp"
#include "eqshadow/qsim/tableau.hpp"

namespace eqshadow {

// Pure input state; each copy gets its own preparation-noise trajectory.
using InputState = std::variant<DenseState, SparseState, Tableau>;

int num_qubits(const InputState& s);
const char* backend_name(const InputState& s);

// Circuit family used when gate noise has to be placed on real gates.
enum class Synthesis { CzLayers, Lnn };

struct SamplerSettings {
  NoiseModel noise;
  Synthesis synthesis = Synthesis::CzLayers;
};

// Outcome of one measurement-circuit run: label with the outcome folded in.
struct EspovmDraw {
  EqLabel label;
  Bits raw = 0;  // circuit outcome p
};

EspovmDraw sample_espovm(const InputState& psi, Scheme scheme, const SamplerSettings& cfg, Rng& rng);
// Computational-basis measurement of one (prep-noisy) copy.
Bits sample_computational(const InputState& psi, const SamplerSettings& cfg, Rng& rng);

}  // namespace eqshadow
