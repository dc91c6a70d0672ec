#pragma once

#include "eqshadow/eqcore/moments.hpp"
#include "eqshadow/qsim/noise.hpp"

namespace eqshadow {

inline constexpr int kDensityOracleCap = 6;

// Exact channel composition on density matrices, n <= 6.
Matrix density_of(const std::vector<cplx>& psi);
void apply_gate(Matrix& rho, int n, const Gate& g);
void apply_pauli_channel(Matrix& rho, int n, int q, const PauliDist& d);
// Fault channel of one gate: with probability rate, an independent draw on
// each touched qubit.
void apply_fault_channel(Matrix& rho, int n, const Gate& g, const ErrorChannel& ch);

// rho prepared by the circuit from |0..0> with gate faults, then the
// preparation channel on every qubit.
Matrix density_from_circuit(const Circuit& prep, const NoiseModel& noise);
// Pure input followed by the preparation channel.
Matrix density_with_prep_noise(const std::vector<cplx>& psi, const PauliDist& prep);

double expectation(const Matrix& rho, const Matrix& obs);

}  // namespace eqshadow
