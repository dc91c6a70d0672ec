#pragma once

#include <vector>

#include "eqshadow/eqcore/moments.hpp"
#include "eqshadow/eqcore/quadratic.hpp"

namespace eqshadow {

// Target observable. Pure targets (dense, sparse, graph) are projectors.
class Observable {
 public:
  enum class Kind { Dense, PureDense, PureSparse, Graph };

  static Observable dense(Matrix o);
  static Observable pure(std::vector<cplx> psi);
  static Observable pure_sparse(int n, std::vector<SparseTerm> terms);
  static Observable graph(QuadraticState g);

  Kind kind() const { return kind_; }
  int num_qubits() const { return n_; }
  double trace() const;
  // tr(O_0^2) for the traceless part O_0.
  double traceless_norm_sq() const;
  bool is_real() const;

  // <phi_A|O|phi_A>
  double equatorial_expectation(const EqLabel& a) const;
  // <p|O|p>
  double basis_expectation(Bits p) const;
  // <v|O|v> for a dense vector.
  double state_expectation(const std::vector<cplx>& v) const;
  // tr(rho O), dense only (n within the dense cap).
  double expectation(const Matrix& rho) const;
  Matrix matrix() const;

 private:
  Kind kind_ = Kind::Dense;
  int n_ = 0;
  Matrix dense_;
  std::vector<cplx> psi_;
  std::vector<SparseTerm> sparse_;
  QuadraticState graph_;
};

}  // namespace eqshadow
