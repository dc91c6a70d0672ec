#pragma once

#include "eqshadow/shadow/observable.hpp"
#include "eqshadow/shadow/sampler.hpp"
#include "eqshadow/synth/clifford.hpp"

namespace eqshadow {

struct CliffordDraw {
  CliffordSample unitary;
  Bits outcome = 0;
};

// Uniform Clifford U on one copy, Z measurement. Gate faults are placed only
// on the first Hadamard-free block; everything after it is classical
// post-processing of the outcome.
CliffordDraw sample_clifford_shadow(const InputState& psi, const SamplerSettings& cfg, Rng& rng);

// (2^n + 1) <p|U O U^dag|p> - tr O  (dense evaluation, n <= dense cap).
double clifford_estimate(const CliffordDraw& d, const Observable& o);

inline double clifford_baseline_sample(const InputState& psi, const Observable& o, const SamplerSettings& cfg,
                                       Rng& rng) {
  return clifford_estimate(sample_clifford_shadow(psi, cfg, rng), o);
}

}  // namespace eqshadow
