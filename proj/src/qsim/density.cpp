#include "eqshadow/qsim/density.hpp"

#include <stdexcept>

#include "eqshadow/qsim/dense.hpp"

namespace eqshadow {

namespace {

Matrix gate_matrix(int n, const Gate& g) {
  const auto d = Eigen::Index{1} << n;
  Matrix u(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    std::vector<cplx> e(static_cast<std::size_t>(d), 0.0);
    e[static_cast<std::size_t>(c)] = 1.0;
    auto s = DenseState::from_amplitudes(std::move(e));
    s.apply(g);
    for (Eigen::Index r = 0; r < d; ++r) u(r, c) = s.amplitudes()[static_cast<std::size_t>(r)];
  }
  return u;
}

void check(int n) {
  if (n < 1 || n > kDensityOracleCap) throw std::invalid_argument("density oracle is limited to n <= 6");
}

}  // namespace

Matrix density_of(const std::vector<cplx>& psi) {
  const Eigen::Map<const Vector> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
  return v * v.adjoint();
}

void apply_gate(Matrix& rho, int n, const Gate& g) {
  check(n);
  const Matrix u = gate_matrix(n, g);
  rho = u * rho * u.adjoint();
}

void apply_pauli_channel(Matrix& rho, int n, int q, const PauliDist& d) {
  if (d.trivial()) return;
  Matrix out = d.p[0] * rho;
  const GateKind kinds[3] = {GateKind::X, GateKind::Y, GateKind::Z};
  for (int k = 0; k < 3; ++k) {
    const double w = d.p[static_cast<std::size_t>(k + 1)];
    if (w == 0.0) continue;
    Matrix t = rho;
    apply_gate(t, n, Gate{kinds[k], q});
    out += w * t;
  }
  rho = out;
}

void apply_fault_channel(Matrix& rho, int n, const Gate& g, const ErrorChannel& ch) {
  if (ch.trivial()) return;
  Matrix faulty = rho;
  apply_pauli_channel(faulty, n, g.q0, ch.dist);
  if (g.two_qubit()) apply_pauli_channel(faulty, n, g.q1, ch.dist);
  rho = (1.0 - ch.rate) * rho + ch.rate * faulty;
}

Matrix density_from_circuit(const Circuit& prep, const NoiseModel& noise) {
  const int n = prep.num_qubits();
  check(n);
  std::vector<cplx> zero(std::size_t{1} << n, 0.0);
  zero[0] = 1.0;
  Matrix rho = density_of(zero);
  for (const auto& layer : prep.layers())
    for (const auto& g : layer) {
      apply_gate(rho, n, g);
      apply_fault_channel(rho, n, g, noise.gate[static_cast<std::size_t>(classify(g))]);
    }
  for (int q = 0; q < n; ++q) apply_pauli_channel(rho, n, q, noise.prep);
  return rho;
}

Matrix density_with_prep_noise(const std::vector<cplx>& psi, const PauliDist& prep) {
  const int n = std::countr_zero(psi.size());
  check(n);
  Matrix rho = density_of(psi);
  for (int q = 0; q < n; ++q) apply_pauli_channel(rho, n, q, prep);
  return rho;
}

double expectation(const Matrix& rho, const Matrix& obs) { return (rho * obs).trace().real(); }

}  // namespace eqshadow
