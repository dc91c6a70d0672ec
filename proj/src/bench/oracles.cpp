#include <algorithm>
#include <cmath>

#include "eqshadow/bench/experiments.hpp"
#include "eqshadow/eqcore/frame.hpp"
#include "eqshadow/eqcore/moments.hpp"
#include "eqshadow/eqcore/quadratic.hpp"
#include "eqshadow/qsim/dense.hpp"
#include "eqshadow/shadow/exact.hpp"
#include "eqshadow/shadow/protocol.hpp"
#include "eqshadow/synth/edge_coloring.hpp"
#include "eqshadow/synth/espovm_circuit.hpp"
#include "eqshadow/synth/lnn.hpp"
#include "eqshadow/synth/metrics.hpp"

namespace eqshadow {

namespace {

void check(ExperimentResult& res, const std::string& params, double value, double limit, bool upper,
           std::uint64_t samples = 0) {
  res.rows.push_back({"", params, value, std::nullopt, std::nullopt, samples});
  const bool ok = upper ? value <= limit : value >= limit;
  if (!ok) {
    res.passed = false;
    res.failures.push_back(params + ": " + format_number(value) + (upper ? " > " : " < ") + format_number(limit));
  }
}

// Classical run of a CNOT/phase circuit on basis input x: returns (y, exponent of i).
std::pair<Bits, int> run_phase_permutation(const Circuit& c, Bits x) {
  int ph = 0;
  for (const auto& layer : c.layers())
    for (const auto& g : layer) switch (g.kind) {
        case GateKind::CNOT:
          if (bit(x, g.q0)) x ^= Bits{1} << g.q1;
          break;
        case GateKind::CZ: ph += 2 * (bit(x, g.q0) & bit(x, g.q1)); break;
        case GateKind::S: ph += bit(x, g.q0); break;
        case GateKind::Z: ph += 2 * bit(x, g.q0); break;
        case GateKind::Sdg: ph += 3 * bit(x, g.q0); break;
        case GateKind::X: x ^= Bits{1} << g.q0; break;
        default: throw std::invalid_argument("gate outside the CNOT/phase set");
      }
  return {x, ph & 3};
}

// max_x |U|x> - g i^{q(x)} |rev x>| for the global phase g fixed at x = 0.
double lnn_error(const Circuit& c, const EqLabel& a) {
  const int n = a.num_qubits();
  const auto [y0, p0] = run_phase_permutation(c, 0);
  if (y0 != 0) return 2.0;
  const int g = p0 - a.phase(0);
  double err = 0;
  for (Bits x = 0; x < (Bits{1} << n); ++x) {
    const auto [y, p] = run_phase_permutation(c, x);
    const Bits want = n > 1 ? reverse_bits(x, n) : x;
    if (y != want) return 2.0;
    err = std::max(err, std::abs(ipow(p) - ipow(g + a.phase(x))));
  }
  return err;
}

}  // namespace

ExperimentResult verify_moments(const std::vector<int>& ns) {
  ExperimentResult res;
  for (int n : ns)
    for (Scheme s : {Scheme::Eq, Scheme::Req}) {
      for (int t = 1; t <= 3; ++t) {
        const double d = (moment_exact(s, n, t) - moment_closed_form(s, n, t)).cwiseAbs().maxCoeff();
        check(res, Params().add("check", "moment").add("scheme", scheme_name(s)).add("n", n).add("t", t).str(), d,
              1e-12, true);
      }
      const double d = (third_moment_combination(s, n) - moment_closed_form(s, n, 3)).cwiseAbs().maxCoeff();
      check(res, Params().add("check", "third-moment-combination").add("scheme", scheme_name(s)).add("n", n).str(), d,
            1e-12, true);
    }
  return res;
}

ExperimentResult verify_ic(const std::vector<int>& ns) {
  ExperimentResult res;
  for (int n : ns)
    for (Scheme s : {Scheme::Eq, Scheme::Req}) {
      auto povm = espovm_elements(s, n);
      const auto d = Eigen::Index{1} << n;
      const double comp = (povm_sum(povm) - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
      const Params base = Params().add("scheme", scheme_name(s)).add("n", n);
      check(res, Params(base).add("check", "completeness").str(), comp, 1e-12, true);
      check(res, Params(base).add("check", "espovm-frame-min-eig").str(), ic_check(frame_operator(povm)).min_eigenvalue,
            1e-9, true);
      for (auto& e : computational_basis_elements(n)) povm.push_back(e);
      const double lo = std::ldexp(1.0, -n);
      const double ev = ic_check(frame_operator(povm)).min_eigenvalue;
      // Real labels cannot see antisymmetric operators; only eq is IC.
      if (s == Scheme::Eq)
        check(res, Params(base).add("check", "combined-frame-min-eig").str(), ev, lo - 1e-9, false);
      else
        res.rows.push_back({"", Params(base).add("check", "combined-frame-min-eig").str(), ev, std::nullopt,
                            std::nullopt, 0});
    }
  return res;
}

ExperimentResult verify_synth(const std::vector<int>& ns, int labels, std::uint64_t seed, int workers) {
  ExperimentResult res;
  // LNN synthesis: correctness, CNOT depth, CNOT count.
  struct LnnStats {
    double err = 0;
    int depth = 0, total_depth = 0, cnots = 0;
    bool nn = true;
  };
  std::vector<LnnStats> stats(ns.size());
  parallel_for(ns.size(), workers, [&](std::uint64_t i) {
    const int n = ns[i];
    Rng rng = stream_rng(seed, 0, i, ns.size());
    LnnStats st;
    for (int k = 0; k < labels; ++k) {
      const auto a = EqLabel::random(k % 2 ? Scheme::Req : Scheme::Eq, n, rng);
      const Circuit c = lnn_synthesize(a);
      const auto m = depth_and_counts(c);
      st.err = std::max(st.err, lnn_error(c, a));
      st.depth = std::max(st.depth, m.two_qubit_depth);
      st.total_depth = std::max(st.total_depth, m.depth);
      st.cnots = std::max(st.cnots, m.nn_cnot_count);
      st.nn = st.nn && m.only_nearest_neighbor && m.cz_count == 0 && m.cnot_count == m.nn_cnot_count;
    }
    stats[i] = st;
  });
  const auto nl = static_cast<std::uint64_t>(labels);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const int n = ns[i];
    const Params base = Params().add("n", n);
    check(res, Params(base).add("check", "lnn-unitary-error").str(), stats[i].err, 1e-10, true, nl);
    check(res, Params(base).add("check", "lnn-cnot-depth").str(), stats[i].depth, 2 * n + 2, true, nl);
    check(res, Params(base).add("check", "lnn-nn-cnot-count").str(), stats[i].cnots, n * n, true, nl);
    check(res, Params(base).add("check", "lnn-nearest-neighbour").str(), stats[i].nn ? 1 : 0, 1, false, nl);
    // Phase layers cannot all share CNOT slots, so total depth is only reported.
    res.rows.push_back({"", Params(base).add("check", "lnn-total-depth").str(), double(stats[i].total_depth),
                        std::nullopt, std::nullopt, nl});
  }

  // Edge colouring on random graphs, n up to 64.
  Rng grng = stream_rng(seed, 1, 0, 1);
  int worst = -64;
  for (int n = 2; n <= 64; ++n)
    for (int k = 0; k < 4; ++k) {
      const double dens = uniform01(grng);
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (uniform01(grng) < dens) edges.emplace_back(i, j);
      worst = std::max(worst, static_cast<int>(edge_color_layers(n, edges).size()) - n);
    }
  check(res, Params().add("check", "cz-layers-minus-n").add("n", "2..64").str(), worst, 0, true, 63 * 4);

  // Measurement-circuit law against the label overlaps.
  Rng lrng = stream_rng(seed, 2, 0, 1);
  for (int n = 1; n <= 4; ++n) {
    double tv = 0;
    for (int k = 0; k < 10; ++k) {
      const auto a = EqLabel::random(k % 2 ? Scheme::Req : Scheme::Eq, n, lrng);
      const auto psi = random_pure_state(n, false, lrng);
      const auto dense = DenseState::from_amplitudes(psi);
      for (const Circuit& c : {espovm_measurement_circuit(a), espovm_measurement_circuit(a, MeasurementForm::Bases),
                               lnn_measurement_circuit(a)}) {
        const auto law = outcome_distribution(c, dense);
        double d = 0;
        for (Bits p = 0; p < law.size(); ++p) d += 0.5 * std::abs(law[p] - std::norm(overlap_dense(a.with_outcome(p), psi)));
        tv = std::max(tv, d);
      }
    }
    check(res, Params().add("check", "circuit-law-tv").add("n", n).str(), tv, 1e-10, true, 30);
  }
  return res;
}

}  // namespace eqshadow
