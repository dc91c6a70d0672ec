#pragma once

#include <vector>

#include "eqshadow/eqcore/moments.hpp"

namespace eqshadow {

// Rank-one POVM element weight * |v><v| with |v| = 1.
struct PovmElement {
  double weight = 0.0;
  std::vector<cplx> state;
};

// All labels with weight 2^n / (number of labels).
std::vector<PovmElement> espovm_elements(Scheme scheme, int n);
std::vector<PovmElement> computational_basis_elements(int n);

Matrix povm_sum(const std::vector<PovmElement>& povm);

// sum_j |Pi_j>><<Pi_j| / tr(Pi_j), acting on vectorised operators.
Matrix frame_operator(const std::vector<PovmElement>& povm);

struct IcReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool informationally_complete = false;
};

IcReport ic_check(const Matrix& frame, double tol = 1e-9);

}  // namespace eqshadow
