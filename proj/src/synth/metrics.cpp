#include "eqshadow/synth/metrics.hpp"

#include <cmath>
#include <cstdlib>

namespace eqshadow {

CircuitMetrics depth_and_counts(const Circuit& c) {
  CircuitMetrics m;
  for (const auto& layer : c.layers()) {
    bool two = false;
    for (const auto& g : layer) {
      if (!g.two_qubit()) {
        ++m.single_qubit_count;
        continue;
      }
      two = true;
      const bool nn = std::abs(g.q0 - g.q1) == 1;
      m.only_nearest_neighbor &= nn;
      if (g.kind == GateKind::CZ) {
        ++m.cz_count;
        m.nn_cz_count += nn;
      } else {
        ++m.cnot_count;
        m.nn_cnot_count += nn;
      }
    }
    m.two_qubit_depth += two;
  }
  m.depth = static_cast<int>(c.layers().size()) + (c.has_measurement() ? 1 : 0);
  return m;
}

std::vector<DepthRow> depth_comparison_table(const std::vector<int>& ns, double bias) {
  std::vector<DepthRow> rows;
  for (int n : ns)
    rows.push_back({n, 2.0 * n, 3.0 * n, 20.0 * std::log(9.0 * n / bias)});
  return rows;
}

}  // namespace eqshadow
