#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "eqshadow/qsim/dense.hpp"
#include "eqshadow/qsim/density.hpp"
#include "eqshadow/qsim/noise.hpp"
#include "eqshadow/qsim/sparse.hpp"
#include "eqshadow/qsim/tableau.hpp"

using namespace eqshadow;

namespace {

Circuit random_clifford_circuit(int n, int depth, Rng& rng, bool with_h = true) {
  Circuit c(n);
  const GateKind one[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z};
  for (int l = 0; l < depth; ++l) {
    Layer layer;
    Bits used = 0;
    for (int tries = 0; tries < n; ++tries) {
      const int a = static_cast<int>(uniform_below(rng, n));
      if (used >> a & 1u) continue;
      if (n > 1 && (rng() & 1u)) {
        const int b = static_cast<int>(uniform_below(rng, n));
        if (b == a || (used >> b & 1u)) continue;
        layer.push_back({(rng() & 1u) ? GateKind::CZ : GateKind::CNOT, a, b});
        used |= (Bits{1} << a) | (Bits{1} << b);
      } else {
        GateKind k = one[uniform_below(rng, 6)];
        if (!with_h && k == GateKind::H) k = GateKind::S;
        layer.push_back({k, a});
        used |= Bits{1} << a;
      }
    }
    if (!layer.empty()) c.add_layer(layer);
  }
  return c;
}

double phase_insensitive_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx ip = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
  return std::abs(1.0 - std::abs(ip));
}

std::vector<cplx> dense_run(const Circuit& c) {
  DenseState s(c.num_qubits());
  s.apply(c);
  return s.amplitudes();
}

}  // namespace

TEST(Circuit, TextRoundTrip) {
  const char* text = "H 0\nH 1\n---\nCZ 0 2\nS 1\n---\nCNOT 2 3\n---\nMEAS X 0\nMEAS Y 1\nMEAS Z 2\nMEAS Z 3\nFLIP 1\nREVERSE\n";
  const Circuit c = Circuit::parse(text);
  EXPECT_EQ(c.num_qubits(), 4);
  EXPECT_EQ(c.layers().size(), 3u);
  EXPECT_EQ(c.measurement(1), Basis::Y);
  EXPECT_EQ(c.flips(), 0b10u);
  EXPECT_TRUE(c.reverse_outcome());
  const Circuit d = Circuit::parse(c.to_text());
  EXPECT_EQ(d.to_text(), c.to_text());
}

TEST(Circuit, RejectsOverlappingLayer) {
  EXPECT_THROW(Circuit::parse("CZ 0 1\nH 1\n"), std::invalid_argument);
  Circuit c(3);
  EXPECT_THROW(c.add_layer({{GateKind::CNOT, 0, 1}, {GateKind::CZ, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(c.add_layer({{GateKind::H, 3}}), std::invalid_argument);
}

TEST(Dense, InverseUndoesCircuit) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_clifford_circuit(4, 8, rng);
    DenseState s(4);
    s.apply(Gate{GateKind::H, 0});
    const auto start = s.amplitudes();
    s.apply(c);
    s.apply(c.inverse());
    EXPECT_LT(phase_insensitive_distance(start, s.amplitudes()), 1e-12);
  }
}

TEST(Dense, BellStateDistribution) {
  Circuit c(2);
  c.add_layer({{GateKind::H, 0}});
  c.add_layer({{GateKind::CNOT, 0, 1}});
  c.measure_all(Basis::Z);
  const auto p = outcome_distribution(c, DenseState(2));
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
  c.measure_all(Basis::X);
  const auto q = outcome_distribution(c, DenseState(2));
  EXPECT_NEAR(q[0] + q[3], 1.0, 1e-12);
}

TEST(Dense, CapFromEnvironmentDefault) { EXPECT_GE(dense_qubit_cap(), 1); }

TEST(Sparse, MatchesDenseOnRandomCircuits) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const Circuit c = random_clifford_circuit(n, 6, rng);
    SparseState s = SparseState::w(n);
    auto dense_amp = std::vector<cplx>(std::size_t{1} << n, 0.0);
    for (const auto& t : s.terms()) dense_amp[t.basis] = t.amp;
    DenseState d = DenseState::from_amplitudes(dense_amp);
    s.apply(c);
    d.apply(c);
    for (Bits x = 0; x < (Bits{1} << n); ++x)
      ASSERT_NEAR(std::abs(s.amplitude(x) - d.amplitudes()[x]), 0.0, 1e-12);
  }
}

TEST(Sparse, HadamardSamplerMatchesExactLaw) {
  Rng rng(9);
  const int n = 4;
  std::vector<SparseTerm> beta = {{0b0001, {0.5, 0.1}}, {0b0110, {-0.3, 0.4}}, {0b1111, {0.2, -0.6}}, {0b1000, {0.1, 0.2}}};
  double nrm = 0;
  for (auto& t : beta) nrm += std::norm(t.amp);
  for (auto& t : beta) t.amp /= std::sqrt(nrm);
  std::vector<cplx> v(16, 0.0);
  for (auto& t : beta) v[t.basis] = t.amp;
  walsh_hadamard(v);
  std::vector<double> exact(16);
  for (int p = 0; p < 16; ++p) exact[static_cast<std::size_t>(p)] = std::norm(v[static_cast<std::size_t>(p)]) / 16.0;
  std::vector<double> freq(16, 0.0);
  const int samples = 200000;
  for (int k = 0; k < samples; ++k) freq[sample_hadamard_sparse(n, beta, rng)] += 1.0 / samples;
  double tv = 0;
  for (int p = 0; p < 16; ++p) tv += 0.5 * std::abs(freq[static_cast<std::size_t>(p)] - exact[static_cast<std::size_t>(p)]);
  EXPECT_LT(tv, 0.01);
}

TEST(Tableau, StateMatchesDense) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const Circuit c = random_clifford_circuit(n, 10, rng);
    Tableau t(n);
    t.apply(c);
    EXPECT_LT(phase_insensitive_distance(t.to_statevector(), dense_run(c)), 1e-10) << c.to_text();
  }
}

TEST(Tableau, SupportMatchesDenseDistribution) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const Circuit c = random_clifford_circuit(n, 10, rng);
    Tableau t(n);
    t.apply(c);
    const auto sup = t.z_support();
    const double p = std::ldexp(1.0, -static_cast<int>(sup.basis.size()));
    std::vector<double> law(std::size_t{1} << n, 0.0);
    for (Bits m = 0; m < (Bits{1} << sup.basis.size()); ++m) {
      Bits x = sup.offset;
      for (std::size_t k = 0; k < sup.basis.size(); ++k)
        if ((m >> k) & 1u) x ^= sup.basis[k];
      law[x] += p;
    }
    const auto amps = dense_run(c);
    double tv = 0;
    for (std::size_t x = 0; x < law.size(); ++x) tv += 0.5 * std::abs(law[x] - std::norm(amps[x]));
    EXPECT_LT(tv, 1e-10);
  }
}

TEST(Tableau, MeasurementSamplesSupport) {
  Rng rng(6);
  const Circuit c = random_clifford_circuit(5, 12, rng);
  Tableau t(5);
  t.apply(c);
  const auto amps = dense_run(c);
  std::map<Bits, int> counts;
  for (int k = 0; k < 4000; ++k) {
    Tableau copy = t;
    const Bits x = copy.measure_all(rng);
    ASSERT_GT(std::norm(amps[x]), 1e-12);
    ++counts[x];
  }
  for (const auto& [x, cnt] : counts) EXPECT_NEAR(cnt / 4000.0, std::norm(amps[x]), 0.05);
}

TEST(Tableau, OverlapMatchesDense) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const Circuit a = random_clifford_circuit(n, 8, rng), b = random_clifford_circuit(n, 8, rng);
    Tableau ta(n), tb(n);
    ta.apply(a);
    tb.apply(b);
    const auto va = dense_run(a), vb = dense_run(b);
    cplx ip = 0;
    for (std::size_t i = 0; i < va.size(); ++i) ip += std::conj(va[i]) * vb[i];
    EXPECT_NEAR(ta.overlap_sq(tb), std::norm(ip), 1e-10);
  }
}

TEST(Tableau, EquatorialLabelState) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = EqLabel::random(trial % 2 ? Scheme::Eq : Scheme::Req, 1 + trial % 6, rng);
    EXPECT_LT(phase_insensitive_distance(tableau_of(a).to_statevector(), a.statevector()), 1e-10);
  }
}

TEST(PauliFrame, FlipsMatchDenseInsertion) {
  Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    Circuit c = random_clifford_circuit(n, 6, rng);
    c.measure_all(trial % 2 ? Basis::Z : Basis::X);
    NoiseModel m;
    m.gate = {ErrorChannel::depolarizing(0.5), ErrorChannel::depolarizing(0.5), ErrorChannel::depolarizing(0.5)};
    const auto events = sample_gate_errors(c, m, rng);
    // Noisy circuit with the Paulis inserted explicitly.
    Circuit noisy(n);
    std::size_t next = 0;
    for (std::size_t l = 0; l < c.layers().size(); ++l) {
      noisy.add_layer(c.layers()[l]);
      while (next < events.size() && events[next].layer == static_cast<int>(l)) {
        const auto& e = events[next++];
        const GateKind k = e.pauli == Pauli::X ? GateKind::X : e.pauli == Pauli::Y ? GateKind::Y : GateKind::Z;
        noisy.add_layer({{k, e.qubit}});
      }
    }
    noisy.measure_all(c.measurement(0));
    DenseState in(n);
    in.apply(Gate{GateKind::H, 0});
    const auto ideal = outcome_distribution(c, in);
    const auto got = outcome_distribution(noisy, in);
    const Bits f = propagate_to_flips(c, events);
    for (Bits x = 0; x < ideal.size(); ++x) ASSERT_NEAR(got[x ^ f], ideal[x], 1e-10);
  }
}

TEST(Noise, GadgetizeReplacesLongRange) {
  NoiseModel m;
  m.gate[static_cast<std::size_t>(GateClass::LongRange)] = ErrorChannel::depolarizing(0.05);
  const auto g = gadgetize(m);
  const auto& lr = g.gate[static_cast<std::size_t>(GateClass::LongRange)];
  EXPECT_DOUBLE_EQ(lr.rate, 0.05);
  EXPECT_DOUBLE_EQ(lr.dist.p[1], 0.0);
  EXPECT_DOUBLE_EQ(lr.dist.p[3], 0.5);
  EXPECT_EQ(classify({GateKind::CZ, 2, 3}), GateClass::NearestNeighbor);
  EXPECT_EQ(classify({GateKind::CZ, 0, 3}), GateClass::LongRange);
}

TEST(Density, GhzFidelityUnderZNoise) {
  const int n = 5;
  const double eta = 0.1;
  Circuit prep(n);
  prep.add_layer({{GateKind::H, 0}});
  for (int q = 0; q + 1 < n; ++q) prep.add_layer({{GateKind::CNOT, q, q + 1}});
  NoiseModel m;
  m.prep = PauliDist::z_flip(eta);
  const Matrix rho = density_from_circuit(prep, m);
  const auto ghz = dense_run(prep);
  EXPECT_NEAR(expectation(rho, density_of(ghz)), 0.5 * (1 + std::pow(1 - 2 * eta, n)), 1e-12);
  m.prep = PauliDist::x_flip(eta);
  EXPECT_NEAR(expectation(density_from_circuit(prep, m), density_of(ghz)),
              std::pow(1 - eta, n) + std::pow(eta, n), 1e-12);
  EXPECT_THROW(density_from_circuit(Circuit(7), m), std::invalid_argument);
}
