#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "eqshadow/eqcore/quadratic.hpp"
#include "eqshadow/qsim/dense.hpp"
#include "eqshadow/qsim/tableau.hpp"
#include "eqshadow/synth/clifford.hpp"
#include "eqshadow/synth/edge_coloring.hpp"
#include "eqshadow/synth/espovm_circuit.hpp"
#include "eqshadow/synth/lnn.hpp"
#include "eqshadow/synth/metrics.hpp"

using namespace eqshadow;

namespace {

std::vector<cplx> random_state(int n, Rng& rng) {
  std::vector<cplx> v(std::size_t{1} << n);
  double nrm = 0;
  for (auto& a : v) {
    // Box-Muller on bit-exact uniforms.
    const double u1 = 1.0 - uniform01(rng), u2 = uniform01(rng), u3 = 1.0 - uniform01(rng), u4 = uniform01(rng);
    a = {std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2), std::sqrt(-2 * std::log(u3)) * std::cos(2 * M_PI * u4)};
    nrm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(nrm);
  return v;
}

double tv_against_label_law(const Circuit& c, const EqLabel& a, const std::vector<cplx>& psi) {
  const auto law = outcome_distribution(c, DenseState::from_amplitudes(psi));
  double tv = 0;
  for (Bits p = 0; p < law.size(); ++p) {
    const double expect = std::norm(overlap_dense(a.with_outcome(p), psi));
    tv += 0.5 * std::abs(law[p] - expect);
  }
  return tv;
}

}  // namespace

TEST(EdgeColoring, RandomGraphsAreProper) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 63));
    const double density = uniform01(rng);
    std::vector<Edge> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform01(rng) < density) {
          edges.emplace_back(i, j);
          ++deg[static_cast<std::size_t>(i)];
          ++deg[static_cast<std::size_t>(j)];
        }
    const auto layers = edge_color_layers(n, edges);
    const int max_deg = edges.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    ASSERT_LE(static_cast<int>(layers.size()), max_deg + 1);
    ASSERT_LE(static_cast<int>(layers.size()), n);
    std::set<Edge> seen;
    for (const auto& l : layers) {
      Bits used = 0;
      for (auto [a, b] : l) {
        ASSERT_FALSE((used >> a) & 1u);
        ASSERT_FALSE((used >> b) & 1u);
        used |= (Bits{1} << a) | (Bits{1} << b);
        seen.insert({a, b});
      }
    }
    ASSERT_EQ(seen, std::set<Edge>(edges.begin(), edges.end()));
  }
}

TEST(EdgeColoring, CompleteGraphs) {
  for (int n : {3, 4, 5, 6, 7, 64}) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    EXPECT_EQ(edge_color_layers(n, edges).size(), static_cast<std::size_t>(n % 2 ? n : n - 1));
  }
}

TEST(EspovmCircuit, ZeroLabelIsHadamardLayer) {
  const auto c = espovm_measurement_circuit(EqLabel(Scheme::Eq, 4));
  const auto m = depth_and_counts(c);
  EXPECT_EQ(m.cz_count, 0);
  EXPECT_EQ(m.depth, 2);
}

TEST(EspovmCircuit, RealLabelsMeasureInX) {
  Rng rng(2);
  const auto a = EqLabel::random(Scheme::Req, 5, rng);
  const auto c = espovm_measurement_circuit(a, MeasurementForm::Bases);
  for (int q = 0; q < 5; ++q) EXPECT_EQ(c.measurement(q), Basis::X);
}

TEST(EspovmCircuit, OutcomeLawMatchesLabelOverlaps) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = EqLabel::random(trial % 2 ? Scheme::Eq : Scheme::Req, n, rng);
    const auto psi = random_state(n, rng);
    EXPECT_LT(tv_against_label_law(espovm_measurement_circuit(a), a, psi), 1e-10);
    EXPECT_LT(tv_against_label_law(espovm_measurement_circuit(a, MeasurementForm::Bases), a, psi), 1e-10);
    EXPECT_LT(tv_against_label_law(lnn_measurement_circuit(a), a, psi), 1e-10);
  }
}

TEST(Lnn, PatternsMatchWireContents) {
  for (int n = 2; n <= 16; ++n) {
    const auto pat = lnn_patterns(n);
    EXPECT_EQ(pat.pj.size(), static_cast<std::size_t>(n % 2 ? 2 * n - 3 : 2 * n - 2));
    EXPECT_EQ(pat.pk.size(), pat.pj.size());
    std::vector<Bits> wire(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) wire[static_cast<std::size_t>(i)] = Bits{1} << i;
    const auto layers = lnn_cnot_layers(n);
    for (std::size_t l = 0; l < layers.size(); ++l) {
      for (const auto& g : layers[l]) wire[static_cast<std::size_t>(g.q1)] ^= wire[static_cast<std::size_t>(g.q0)];
      if ((l + 1) % 4 || static_cast<int>((l + 1) / 4) > lnn_blocks(n)) continue;
      const int t = static_cast<int>((l + 1) / 4);
      for (int i = 1; i <= n; ++i) {
        const int j = pat.pj[static_cast<std::size_t>(pat.offset_j(t) + i - 1)];
        const int k = pat.pk[static_cast<std::size_t>(pat.offset_k(t) + i - 1)];
        const Bits expect = low_mask(std::max(j, k)) & ~low_mask(std::min(j, k) - 1);
        ASSERT_EQ(wire[static_cast<std::size_t>(i - 1)], expect) << "n=" << n << " t=" << t << " i=" << i;
      }
    }
    for (int i = 0; i < n; ++i) ASSERT_EQ(wire[static_cast<std::size_t>(i)], Bits{1} << (n - 1 - i));
  }
}

TEST(Lnn, EveryIntervalHasASlot) {
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(lnn_interval_slots(n).size(), static_cast<std::size_t>(n * (n + 1) / 2));
}

TEST(Lnn, CzDecompositionIdentity) {
  for (int n = 2; n <= 7; ++n)
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = mu + 1; nu <= n; ++nu) {
        const auto terms = decompose_cz_phase(mu, nu);
        for (Bits x = 0; x < (Bits{1} << n); ++x) {
          int e = 0;
          for (const auto& t : terms) {
            const Interval iv = t.interval();
            e += t.exponent * parity(x & low_mask(iv.last) & ~low_mask(iv.first - 1));
          }
          ASSERT_EQ(e % 4, 2 * (bit(x, mu - 1) & bit(x, nu - 1)));
        }
      }
}

TEST(Lnn, AdjacentPairUsesThreePrefixes) {
  for (int nu = 3; nu <= 9; ++nu)
    for (const auto& t : decompose_cz_phase(nu - 1, nu)) {
      for (int idx : {t.a, t.b})
        if (idx) EXPECT_TRUE(idx == nu - 2 || idx == nu - 1 || idx == nu);
    }
}

TEST(Lnn, SynthesisRealisesDiagonalTimesReversal) {
  Rng rng(4);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = EqLabel::random(trial % 2 ? Scheme::Eq : Scheme::Req, n, rng);
      const Circuit c = lnn_synthesize(a);
      const auto m = depth_and_counts(c);
      ASSERT_TRUE(m.only_nearest_neighbor);
      ASSERT_EQ(m.cz_count, 0);
      ASSERT_LE(m.two_qubit_depth, 2 * n + 2);
      ASSERT_LE(m.cnot_count, n * n);
      for (Bits x = 0; x < (Bits{1} << n); ++x) {
        std::vector<cplx> e(std::size_t{1} << n, 0.0);
        e[x] = 1.0;
        auto s = DenseState::from_amplitudes(e);
        s.apply(c);
        const Bits y = n > 1 ? reverse_bits(x, n) : x;
        ASSERT_NEAR(std::abs(s.amplitudes()[y] - ipow(a.phase(x))), 0.0, 1e-12) << a.to_string();
      }
    }
}

TEST(Metrics, DepthTable) {
  const auto rows = depth_comparison_table({10}, 0.01);
  EXPECT_NEAR(rows[0].approx_design, 182.1, 0.05);
  EXPECT_EQ(rows[0].espovm, 20);
  EXPECT_EQ(rows[0].clifford, 30);
}

namespace {

// Breadth-first closure of {H, S, CNOT} acting on tableaux.
std::unordered_set<std::string> clifford_group(int n) {
  std::vector<Gate> gens;
  for (int q = 0; q < n; ++q) {
    gens.push_back({GateKind::H, q});
    gens.push_back({GateKind::S, q});
    gens.push_back({GateKind::X, q});
    gens.push_back({GateKind::Z, q});
    for (int r = 0; r < n; ++r)
      if (r != q) gens.push_back({GateKind::CNOT, q, r});
  }
  std::unordered_set<std::string> seen;
  std::deque<Tableau> todo{Tableau(n)};
  seen.insert(todo.front().key());
  while (!todo.empty()) {
    Tableau t = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Tableau u = t;
      u.apply(g);
      if (seen.insert(u.key()).second) todo.push_back(u);
    }
  }
  return seen;
}

}  // namespace

TEST(Clifford, GroupOrders) {
  EXPECT_EQ(clifford_group(1).size(), 24u);
  EXPECT_EQ(clifford_group(2).size(), 11520u);
}

TEST(Clifford, SamplerIsUniform) {
  Rng rng(5);
  for (int n : {1, 2}) {
    const auto group = clifford_group(n);
    const int per_cell = n == 1 ? 4000 : 40;
    const std::size_t samples = group.size() * static_cast<std::size_t>(per_cell);
    std::unordered_map<std::string, int> counts;
    for (std::size_t k = 0; k < samples; ++k) {
      Tableau t(n);
      t.apply(sample_clifford(n, rng).circuit);
      ++counts[t.key()];
    }
    ASSERT_EQ(counts.size(), group.size());
    double chi2 = 0;
    for (const auto& [key, c] : counts) {
      ASSERT_TRUE(group.count(key));
      chi2 += (c - per_cell) * (c - per_cell) / static_cast<double>(per_cell);
    }
    const double dof = static_cast<double>(group.size() - 1);
    EXPECT_LT(chi2, dof + 5 * std::sqrt(2 * dof)) << "n=" << n;
    EXPECT_GT(chi2, dof - 5 * std::sqrt(2 * dof)) << "n=" << n;
  }
}
