#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include <unsupported/Eigen/KroneckerProduct>

#include "eqshadow/eqcore/moments.hpp"
#include "eqshadow/qsim/density.hpp"
#include "eqshadow/shadow/clifford_baseline.hpp"
#include "eqshadow/shadow/estimator.hpp"
#include "eqshadow/shadow/exact.hpp"
#include "eqshadow/shadow/protocol.hpp"
#include "eqshadow/synth/espovm_circuit.hpp"

using namespace eqshadow;

namespace {

// Upper chi-square quantile (Wilson-Hilferty), z = 3.09 for alpha = 1e-3.
double chi2_critical(double dof) {
  const double z = 3.090232;
  const double h = 2.0 / (9.0 * dof);
  return dof * std::pow(1.0 - h + z * std::sqrt(h), 3);
}

double chi2(const std::vector<double>& law, const std::vector<std::uint64_t>& counts, std::uint64_t draws,
            int* dof) {
  double s = 0;
  *dof = -1;
  for (std::size_t k = 0; k < law.size(); ++k) {
    const double e = law[k] * static_cast<double>(draws);
    if (e <= 0) {
      EXPECT_EQ(counts[k], 0u);
      continue;
    }
    s += (counts[k] - e) * (counts[k] - e) / e;
    ++*dof;
  }
  return s;
}

Observable projector(const std::vector<cplx>& psi) { return Observable::pure(psi); }

std::vector<cplx> ghz_vector(int n) {
  std::vector<cplx> v(std::size_t{1} << n, 0.0);
  v.front() = v.back() = 1 / std::sqrt(2.0);
  return v;
}

std::vector<cplx> w_vector(int n) {
  std::vector<cplx> v(std::size_t{1} << n, 0.0);
  for (int i = 0; i < n; ++i) v[std::size_t{1} << i] = 1 / std::sqrt(double(n));
  return v;
}

}  // namespace

TEST(Estimator, IdentityGivesOne) {
  Rng rng(1);
  for (Scheme s : {Scheme::Eq, Scheme::Req}) {
    const auto id = Observable::dense(Matrix::Identity(8, 8));
    for (int k = 0; k < 50; ++k) {
      const auto a = EqLabel::random(s, 3, rng);
      EXPECT_NEAR(estimate_single(s, a, rng() & 7, id), 1.0, 1e-12);
    }
  }
}

TEST(Estimator, SingleQubitBasisExample) {
  const auto o = projector({1.0, 0.0});
  for (std::uint64_t k = 0; k < 4; ++k) {
    const auto a = EqLabel::from_index(Scheme::Eq, 1, k);
    EXPECT_NEAR(estimate_single(Scheme::Eq, a, 0, o), 1.0, 1e-12);
    EXPECT_NEAR(estimate_single(Scheme::Eq, a, 1, o), 0.0, 1e-12);
  }
}

TEST(Estimator, RejectsComplexObservableForReq) {
  Rng rng(2);
  const auto o = Observable::dense(random_hermitian(2, false, rng));
  EXPECT_THROW(estimate_single(Scheme::Req, EqLabel(Scheme::Req, 2), 0, o), std::invalid_argument);
  EXPECT_NO_THROW(estimate_single(Scheme::Eq, EqLabel(Scheme::Eq, 2), 0, o));
}

TEST(Exact, UnbiasedByEnumeration) {
  Rng rng(3);
  for (Scheme s : {Scheme::Eq, Scheme::Req})
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k < 10; ++k) {
        const Matrix rho = random_density(n, rng);
        const auto o = Observable::dense(random_hermitian(n, s == Scheme::Req, rng));
        const auto mom = exact_estimator_moments(s, rho, o);
        EXPECT_NEAR(mom.mean, o.expectation(rho), 1e-10) << scheme_name(s) << " n=" << n;
      }
}

TEST(Exact, BasisStateGivesUniformLabels) {
  for (Scheme s : {Scheme::Eq, Scheme::Req}) {
    Matrix rho = Matrix::Zero(8, 8);
    rho(5, 5) = 1;
    const auto law = label_law(s, rho);
    for (double p : law) EXPECT_NEAR(p, 1.0 / static_cast<double>(law.size()), 1e-14);
  }
}

TEST(Exact, VarianceBoundHolds) {
  Rng rng(4);
  for (Scheme s : {Scheme::Eq, Scheme::Req})
    for (int n = 2; n <= 3; ++n)
      for (int k = 0; k < 20; ++k) {
        const Matrix rho = random_density(n, rng);
        const auto o = Observable::dense(random_hermitian(n, s == Scheme::Req, rng));
        const double lhs = equatorial_second_moment(s, rho, o.matrix());
        EXPECT_LE(lhs, (s == Scheme::Eq ? 14.0 : 13.0) * o.traceless_norm_sq());
        // Full trial variance sits under the advertised per-trial bound.
        EXPECT_LE(exact_estimator_moments(s, rho, o).variance(), variance_bound(s, o));
      }
}

TEST(Exact, SecondMomentMatchesThirdMoment) {
  // E[(c<phi|O0|phi>)^2] = 2^gamma tr((rho x O0 x O0) M3)
  Rng rng(5);
  const int n = 2;
  for (Scheme s : {Scheme::Eq, Scheme::Req}) {
    const Matrix m3 = moment_exact(s, n, 3);
    const Matrix rho = random_density(n, rng);
    Matrix o = random_hermitian(n, s == Scheme::Req, rng);
    o -= Matrix::Identity(4, 4) * (o.trace() / 4.0);
    const Matrix ro = Eigen::kroneckerProduct(rho, Eigen::kroneckerProduct(o, o).eval()).eval();
    const double gamma = s == Scheme::Eq ? 3 * n : 3 * n - 2;
    const double rhs = std::ldexp((ro * m3).trace().real(), static_cast<int>(gamma));
    EXPECT_NEAR(equatorial_second_moment(s, rho, o), rhs, 1e-9);
  }
}

TEST(Sampler, DenseLabelLawChiSquare) {
  Rng rng(6);
  for (Scheme s : {Scheme::Eq, Scheme::Req}) {
    const int n = 2;
    const auto psi = random_pure_state(n, false, rng);
    const auto law = label_law(s, density_of(psi));
    const InputState in = DenseState::from_amplitudes(psi);
    std::vector<std::uint64_t> counts(law.size(), 0);
    const std::uint64_t draws = 200000;
    for (std::uint64_t k = 0; k < draws; ++k) ++counts[sample_espovm(in, s, {}, rng).label.index()];
    int dof = 0;
    const double stat = chi2(law, counts, draws, &dof);
    EXPECT_LT(stat, chi2_critical(dof)) << scheme_name(s);
  }
}

TEST(Sampler, BackendsAgreeInLaw) {
  // Sparse and tableau copies of GHZ_3 against the exact label law.
  Rng rng(7);
  const int n = 3;
  const auto law = label_law(Scheme::Eq, density_of(ghz_vector(n)));
  Tableau t(n);
  t.apply(Gate{GateKind::H, 0});
  t.apply(Gate{GateKind::CNOT, 0, 1});
  t.apply(Gate{GateKind::CNOT, 1, 2});
  const std::vector<InputState> inputs{SparseState::ghz(n), t, DenseState::from_amplitudes(ghz_vector(n))};
  for (const auto& in : inputs) {
    std::vector<std::uint64_t> counts(law.size(), 0);
    const std::uint64_t draws = 100000;
    for (std::uint64_t k = 0; k < draws; ++k) ++counts[sample_espovm(in, Scheme::Eq, {}, rng).label.index()];
    int dof = 0;
    const double stat = chi2(law, counts, draws, &dof);
    EXPECT_LT(stat, chi2_critical(dof)) << backend_name(in);
  }
}

TEST(Sampler, TableauSupportMatchesCircuitLawGhz8) {
  Rng rng(8);
  const int n = 8;
  const auto ghz = ghz_vector(n);
  Tableau t(n);
  t.apply(Gate{GateKind::H, 0});
  for (int q = 0; q + 1 < n; ++q) t.apply(Gate{GateKind::CNOT, q, q + 1});
  for (Scheme s : {Scheme::Eq, Scheme::Req})
    for (int k = 0; k < 10; ++k) {
      const auto a = EqLabel::random(s, n, rng);
      const Circuit c = espovm_measurement_circuit(a);
      const auto law = outcome_distribution(c, DenseState::from_amplitudes(ghz));
      Tableau u = t;
      u.apply(c);
      const auto sup = u.z_support();
      const double w = std::ldexp(1.0, -static_cast<int>(sup.basis.size()));
      std::vector<double> tab(law.size(), 0.0);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << sup.basis.size()); ++m) {
        Bits x = sup.offset;
        for (std::size_t b = 0; b < sup.basis.size(); ++b)
          if ((m >> b) & 1u) x ^= sup.basis[b];
        tab[c.postprocess(x)] += w;
      }
      for (std::size_t p = 0; p < law.size(); ++p) EXPECT_NEAR(law[p], tab[p], 1e-10);
    }
}

TEST(ClosedForm, GhzMatchesGeneric) {
  const int n = 3;
  const auto o = projector(ghz_vector(n));
  for (std::uint64_t k = 0; k < label_count(Scheme::Req, n); ++k) {
    const auto a = EqLabel::from_index(Scheme::Req, n, k);
    for (Bits p2 = 0; p2 < 8; ++p2) {
      EXPECT_NEAR(ghz_estimator(a, p2), estimate_single(Scheme::Req, a, p2, o), 1e-12);
      for (Bits p = 0; p < 8; ++p)
        EXPECT_EQ(ghz_estimator_split(a, p, p2), ghz_estimator(a.with_outcome(p), p2));
    }
  }
}

TEST(ClosedForm, GhzExamples) {
  EXPECT_DOUBLE_EQ(ghz_estimator(EqLabel(Scheme::Req, 4), 0), 1.0);
  EqLabel a(Scheme::Req, 4);
  a.set_diag(2, 1);
  EXPECT_DOUBLE_EQ(ghz_estimator(a, 0), 0.0);
  EXPECT_THROW(ghz_estimator(EqLabel(Scheme::Eq, 4), 0), std::invalid_argument);
}

TEST(ClosedForm, WMatchesGeneric) {
  const int n = 3;
  const auto o = projector(w_vector(n));
  for (std::uint64_t k = 0; k < label_count(Scheme::Req, n); ++k) {
    const auto a = EqLabel::from_index(Scheme::Req, n, k);
    for (Bits p2 = 0; p2 < 8; ++p2) EXPECT_NEAR(w_estimator(a, p2), estimate_single(Scheme::Req, a, p2, o), 1e-12);
  }
  EXPECT_DOUBLE_EQ(w_estimator(EqLabel(Scheme::Req, 4), 1), 1.75);
  EqLabel half(Scheme::Req, 4);
  half.set_diag(0, 1);
  half.set_diag(3, 1);
  EXPECT_DOUBLE_EQ(w_estimator(half, 0), -0.5);
}

TEST(ClosedForm, GraphMatchesGeneric) {
  Rng rng(9);
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1u) edges.emplace_back(i, j);
    const auto g = QuadraticState::graph(n, edges);
    const auto o = Observable::graph(g);
    for (std::uint64_t k = 0; k < label_count(Scheme::Req, n); ++k) {
      const auto a = EqLabel::from_index(Scheme::Req, n, k);
      EXPECT_NEAR(graph_estimator(a, g), estimate_single(Scheme::Req, a, rng() & low_mask(n), o), 1e-12);
    }
    // Matching label: overlap 1.
    EqLabel a(Scheme::Req, n);
    for (auto [i, j] : edges) a.set_edge(i, j, true);
    EXPECT_NEAR(graph_estimator(a, g), std::ldexp(1.0, n - 1) + std::ldexp(1.0, -n) - 0.5, 1e-12);
  }
}

TEST(ClosedForm, GhzInvariantUnderEvenFlips) {
  Rng rng(10);
  const int n = 8;
  for (int k = 0; k < 1000; ++k) {
    const auto a = EqLabel::random(Scheme::Req, n, rng);
    Bits xi = random_word(rng, n);
    if (parity(xi)) xi ^= 1;
    const Bits p2 = rng() & 1u ? 0 : low_mask(n);
    EXPECT_EQ(ghz_estimator(a.with_outcome(xi), p2), ghz_estimator(a, p2));
    EXPECT_TRUE(bitflip_tolerance({0, low_mask(n)}, xi));
    EXPECT_FALSE(bitflip_tolerance({0, low_mask(n)}, xi ^ 2));
  }
  EXPECT_TRUE(bitflip_tolerance({3, 5, 6}, 0));
}

TEST(Bounds, VarianceAndCopies) {
  EXPECT_DOUBLE_EQ(variance_bound(Scheme::Eq, Observable::dense(Matrix::Identity(4, 4))), 0.0);
  const auto p = projector(ghz_vector(3));
  EXPECT_NEAR(p.traceless_norm_sq(), 1 - 1.0 / 8, 1e-12);
  EXPECT_NEAR(variance_bound(Scheme::Eq, p), 15 * (1 - 1.0 / 8), 1e-12);
  EXPECT_NEAR(variance_bound(Scheme::Req, p), 14 * (1 - 1.0 / 8), 1e-12);
  EXPECT_EQ(copy_bound(1.0, 0.5, 0.5, 1), static_cast<std::uint64_t>(std::ceil(136 * std::log(4.0) / 0.25)));
  EXPECT_THROW(copy_bound(1.0, 0.0, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(copy_bound(1.0, 0.5, 1.0, 1), std::invalid_argument);
}

TEST(Bounds, Median) {
  EXPECT_EQ(median({1, 2, 100}), 2);
  EXPECT_EQ(median({4, 1, 3, 2}), 2);
  EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(Protocol, ValidatesSplit) {
  const InputState in = DenseState(2);
  const std::vector<Observable> obs{projector({1, 0, 0, 0})};
  ProtocolConfig cfg;
  cfg.copies = 10;
  cfg.groups = 3;
  EXPECT_THROW(run_protocol(cfg, in, obs), std::invalid_argument);
  cfg.groups = 5;  // N' = 2
  EXPECT_NO_THROW(run_protocol(cfg, in, obs));
  cfg.groups = 10;  // N' = 1
  EXPECT_THROW(run_protocol(cfg, in, obs), std::invalid_argument);
  Rng rng(11);
  cfg.groups = 1;
  cfg.method = Method::Respovm;
  EXPECT_THROW(run_protocol(cfg, in, {Observable::dense(random_hermitian(2, false, rng))}), std::invalid_argument);
}

TEST(Protocol, SingleGroupIsSampleMeanAndDeterministic) {
  Rng rng(12);
  const auto psi = random_pure_state(3, false, rng);
  const InputState in = DenseState::from_amplitudes(psi);
  const std::vector<Observable> obs{projector(random_pure_state(3, false, rng)),
                                    Observable::dense(random_hermitian(3, false, rng))};
  ProtocolConfig cfg;
  cfg.copies = 4000;
  cfg.seed = 99;
  const auto one = run_protocol(cfg, in, obs);
  ASSERT_EQ(one.observables[0].group_means.size(), 1u);
  EXPECT_EQ(one.observables[0].estimate, one.observables[0].group_means[0]);
  cfg.workers = 4;
  const auto four = run_protocol(cfg, in, obs);
  for (std::size_t j = 0; j < obs.size(); ++j) {
    EXPECT_EQ(one.observables[j].estimate, four.observables[j].estimate);
    EXPECT_EQ(one.observables[j].empirical_variance, four.observables[j].empirical_variance);
  }
  cfg.groups = 5;
  cfg.workers = 3;
  const auto mom = run_protocol(cfg, in, obs);
  EXPECT_EQ(mom.observables[1].estimate, median(mom.observables[1].group_means));
  EXPECT_NEAR(mom.observables[0].estimate, obs[0].state_expectation(psi), 0.2);
}

TEST(Protocol, MeanConvergesToTarget) {
  Rng rng(13);
  const auto psi = random_pure_state(3, false, rng);
  const auto o = Observable::dense(random_hermitian(3, true, rng));
  for (Method m : {Method::Espovm, Method::Respovm, Method::Clifford}) {
    ProtocolConfig cfg;
    cfg.method = m;
    cfg.copies = 200000;
    cfg.seed = 5;
    const auto r = run_protocol(cfg, DenseState::from_amplitudes(psi), {o});
    const double se = std::sqrt(r.observables[0].empirical_variance / static_cast<double>(r.trials));
    EXPECT_NEAR(r.observables[0].estimate, o.state_expectation(psi), 5 * se) << method_name(m);
  }
}

TEST(Noise, EvenInjectedFlipLeavesGhzEstimateUnchanged) {
  const int n = 6;
  const InputState in = SparseState::ghz(n);
  SamplerSettings clean, flipped;
  flipped.noise.injected_flip = 0b100101 ^ 0b1;  // weight 2
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng r1(s), r2(s);
    const auto a = sample_espovm(in, Scheme::Req, clean, r1);
    const auto b = sample_espovm(in, Scheme::Req, flipped, r2);
    EXPECT_EQ(ghz_estimator(a.label, 0), ghz_estimator(b.label, 0));
  }
}

TEST(Noise, PrepNoiseMatchesDensityOracle) {
  const int n = 4;
  const double eta = 0.1;
  const auto ghz = ghz_vector(n);
  for (const auto& d : {PauliDist::z_flip(eta), PauliDist::x_flip(eta), PauliDist::depolarizing(eta)}) {
    const double target = expectation(density_with_prep_noise(ghz, d), density_of(ghz));
    ProtocolConfig cfg;
    cfg.method = Method::Respovm;
    cfg.copies = 100000;
    cfg.seed = 17;
    cfg.sampler.noise.prep = d;
    const auto r = run_protocol(cfg, SparseState::ghz(n), {projector(ghz)});
    const double se = std::sqrt(r.observables[0].empirical_variance / static_cast<double>(r.trials));
    EXPECT_NEAR(r.observables[0].estimate, target, 5 * se);
  }
}

TEST(Noise, GateFlipsMatchCircuitSimulation) {
  // Outcome law with gate noise equals the mixture over fault patterns,
  // checked through the estimator mean against a direct dense simulation.
  const int n = 4;
  const auto w = w_vector(n);
  NoiseModel nm;
  nm.gate[static_cast<int>(GateClass::LongRange)] = ErrorChannel::depolarizing(0.2);
  SamplerSettings cfg{nm, Synthesis::CzLayers};
  Rng rng(21);
  double via_flips = 0, via_dense = 0;
  const int draws = 60000;
  const InputState in = DenseState::from_amplitudes(w);
  for (int k = 0; k < draws; ++k) {
    Rng r = rng;
    rng.discard(1000);
    const auto d = sample_espovm(in, Scheme::Req, cfg, r);
    via_flips += w_estimator(d.label, 1);
    // Direct: same label, faults inserted as gates in a dense run.
    Rng q(static_cast<std::uint64_t>(k) + 7);
    const auto a = EqLabel::random(Scheme::Req, n, q);
    const Circuit c = espovm_measurement_circuit(a);
    const auto ev = sample_gate_errors(c, nm, q);
    DenseState s = DenseState::from_amplitudes(w);
    for (std::size_t l = 0; l < c.layers().size(); ++l) {
      for (const auto& g : c.layers()[l]) s.apply(g);
      for (const auto& e : ev)
        if (e.layer == static_cast<int>(l)) {
          const Bits b = Bits{1} << e.qubit;
          s.apply_pauli(e.pauli == Pauli::X || e.pauli == Pauli::Y ? b : 0,
                        e.pauli == Pauli::Z || e.pauli == Pauli::Y ? b : 0);
        }
    }
    s.rotate_to_measurement(c);
    const Bits p = c.postprocess(s.sample(q));
    via_dense += w_estimator(a.with_outcome(p), 1);
  }
  EXPECT_NEAR(via_flips / draws, via_dense / draws, 0.03);
  EXPECT_LT(via_flips / draws, 1.0 - 0.05);  // noise is visible
}

TEST(Clifford, IdentityAndUnbiased) {
  Rng rng(14);
  const int n = 2;
  const auto psi = random_pure_state(n, false, rng);
  const InputState in = DenseState::from_amplitudes(psi);
  const auto id = Observable::dense(Matrix::Identity(4, 4));
  for (int k = 0; k < 20; ++k) EXPECT_NEAR(clifford_baseline_sample(in, id, {}, rng), 1.0, 1e-10);
  const auto o = Observable::dense(random_hermitian(n, false, rng));
  const int draws = 200000;
  double sum = 0, sumsq = 0;
  for (int k = 0; k < draws; ++k) {
    const double v = clifford_baseline_sample(in, o, {}, rng);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sumsq / draws - mean * mean) / draws);
  EXPECT_NEAR(mean, o.state_expectation(psi), 5 * se);
}

TEST(Exact, ReqToEqVarianceRatio) {
  // Complex inputs, real targets, n = 4.
  Rng rng(15);
  const int n = 4;
  double eq = 0, req = 0;
  for (int k = 0; k < 200; ++k) {
    const Matrix rho = density_of(random_pure_state(n, false, rng));
    const auto o = projector(random_pure_state(n, true, rng));
    eq += exact_estimator_moments(Scheme::Eq, rho, o).variance();
    req += exact_estimator_moments(Scheme::Req, rho, o).variance();
  }
  EXPECT_NEAR(req / eq, 0.5, 0.05);
}
