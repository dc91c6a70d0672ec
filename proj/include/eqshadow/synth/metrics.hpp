#pragma once

#include <vector>

#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

struct CircuitMetrics {
  int depth = 0;            // layers, plus one for a terminal measurement
  int two_qubit_depth = 0;  // layers holding a two-qubit gate
  int single_qubit_count = 0;
  int cz_count = 0;
  int cnot_count = 0;
  int nn_cnot_count = 0;
  int nn_cz_count = 0;
  bool only_nearest_neighbor = true;
};

CircuitMetrics depth_and_counts(const Circuit& c);

struct DepthRow {
  int n;
  double espovm;            // 2n
  double clifford;          // 3n
  double approx_design;     // 20 ln(9n / bias)
};

std::vector<DepthRow> depth_comparison_table(const std::vector<int>& ns, double bias);

}  // namespace eqshadow
