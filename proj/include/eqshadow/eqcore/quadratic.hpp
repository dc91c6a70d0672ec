#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "eqshadow/eqcore/label.hpp"

namespace eqshadow {

// f(x) = c + sum_i d_i x_i + 2 sum_{i<j} e_ij x_i x_j  (mod 4)
struct Z4QuadraticForm {
  int n = 0;
  int constant = 0;
  std::vector<int> linear;  // d_i in Z4
  std::vector<Bits> adj;    // e_ij, symmetric, zero diagonal

  explicit Z4QuadraticForm(int nq = 0)
      : n(nq), linear(static_cast<std::size_t>(nq), 0), adj(static_cast<std::size_t>(nq), 0) {}

  void toggle_edge(int i, int j);
  int eval(Bits x) const;
};

// sum_x i^{f(x)} by variable elimination, O(n^3).
cplx exponential_sum(Z4QuadraticForm f);
// Same sum by enumeration, for testing (n <= 24).
cplx exponential_sum_bruteforce(const Z4QuadraticForm& f);

// Graph-like state psi(x) = 2^{-n/2} i^{global} (-1)^{sum_{i<j} G_ij x_i x_j + b.x}.
struct QuadraticState {
  int n = 0;
  std::vector<Bits> adj;  // symmetric, zero diagonal
  Bits linear = 0;
  int global_phase = 0;  // exponent of i

  static QuadraticState graph(int n, const std::vector<std::pair<int, int>>& edges);
  cplx amplitude(Bits x) const;
};

// <phi_A|psi> through the exponential sum.
cplx gauss_overlap(const EqLabel& a, const QuadraticState& psi);

// <phi_A|psi> for a dense vector (index = basis string).
cplx overlap_dense(const EqLabel& a, const std::vector<cplx>& psi);

struct SparseTerm {
  Bits basis;
  cplx amp;
};
// <phi_A|psi> for psi given as a list of basis terms.
cplx overlap_sparse(const EqLabel& a, const std::vector<SparseTerm>& psi);

}  // namespace eqshadow
