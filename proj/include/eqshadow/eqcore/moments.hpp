#pragma once

#include <array>

#include <Eigen/Dense>

#include "eqshadow/eqcore/label.hpp"

namespace eqshadow {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tensor index convention: |x_1 x_2 ... x_t> -> x_1 is the most significant
// block of n bits.

// Average of (|phi_A><phi_A|)^{(x)t} over all labels, t in {1,2,3}.
Matrix moment_exact(Scheme scheme, int n, int t);

// Closed forms. t = 3 is assembled by filtering six-string tuples.
Matrix moment_closed_form(Scheme scheme, int n, int t);

// Third moment assembled from the permutation-sum operators.
Matrix third_moment_combination(Scheme scheme, int n);

enum class KSet { K1, K2 };

// Tuple (x, y, z, w, s, t) indexes |xyz><wst|.
using SixTuple = std::array<Bits, 6>;

// K1: the six strings split into three pairs of equal strings.
// K2: K1, and whenever one pair crosses ket and bra, the remaining ket pair
// equals the remaining bra pair.
bool k_set_contains(KSet k, const SixTuple& v);

}  // namespace eqshadow
