#include "eqshadow/eqcore/frame.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace eqshadow {

std::vector<PovmElement> espovm_elements(Scheme scheme, int n) {
  require_qubits(n, 4);
  const std::uint64_t count = label_count(scheme, n);
  const double w = std::ldexp(1.0, n) / static_cast<double>(count);
  std::vector<PovmElement> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back({w, EqLabel::from_index(scheme, n, i).statevector()});
  return out;
}

std::vector<PovmElement> computational_basis_elements(int n) {
  require_qubits(n, 12);
  const std::size_t d = std::size_t{1} << n;
  std::vector<PovmElement> out;
  for (std::size_t x = 0; x < d; ++x) {
    PovmElement e{1.0, std::vector<cplx>(d, 0.0)};
    e.state[x] = 1.0;
    out.push_back(std::move(e));
  }
  return out;
}

Matrix povm_sum(const std::vector<PovmElement>& povm) {
  const auto d = static_cast<Eigen::Index>(povm.at(0).state.size());
  Matrix m = Matrix::Zero(d, d);
  for (const auto& e : povm) {
    const Eigen::Map<const Vector> v(e.state.data(), d);
    m.noalias() += e.weight * (v * v.adjoint());
  }
  return m;
}

Matrix frame_operator(const std::vector<PovmElement>& povm) {
  const auto d = static_cast<Eigen::Index>(povm.at(0).state.size());
  Matrix f = Matrix::Zero(d * d, d * d);
  Vector vec(d * d);
  for (const auto& e : povm) {
    // |Pi>> = weight * v (x) conj(v); dividing by tr Pi = weight leaves one factor.
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        vec(a * d + b) = e.state[static_cast<std::size_t>(a)] * std::conj(e.state[static_cast<std::size_t>(b)]);
    f.noalias() += e.weight * (vec * vec.adjoint());
  }
  return f;
}

IcReport ic_check(const Matrix& frame, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(frame, Eigen::EigenvaluesOnly);
  IcReport r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.max_eigenvalue = es.eigenvalues().maxCoeff();
  r.informationally_complete = r.min_eigenvalue > tol;
  return r;
}

}  // namespace eqshadow
