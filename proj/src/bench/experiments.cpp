#include "eqshadow/bench/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <Eigen/Core>

#include "eqshadow/qsim/density.hpp"
#include "eqshadow/shadow/estimator.hpp"
#include "eqshadow/shadow/exact.hpp"
#include "eqshadow/shadow/protocol.hpp"
#include "eqshadow/synth/espovm_circuit.hpp"
#include "eqshadow/synth/lnn.hpp"
#include "eqshadow/synth/metrics.hpp"

namespace eqshadow {

using nlohmann::json;

namespace {

const std::vector<std::string> kKinds{"fig2abc", "fig2de", "fig3", "fig5bc", "fig4b", "moments", "ic", "synth-verify"};

template <class T>
std::vector<T> list_of(const json& j, const char* key, std::vector<T> def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

template <class T>
T value_of(const json& j, const char* key, T def) {
  return j.contains(key) ? j.at(key).get<T>() : def;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

PauliDist prep_dist(const std::string& kind, double eta) {
  if (kind == "z") return PauliDist::z_flip(eta);
  if (kind == "x") return PauliDist::x_flip(eta);
  if (kind == "depolarizing") return PauliDist::depolarizing(eta);
  if (kind == "none") return PauliDist::identity();
  throw std::invalid_argument("unknown prep noise: " + kind);
}

ErrorChannel gate_channel(const std::string& kind, double eta) {
  if (kind == "depolarizing") return ErrorChannel::depolarizing(eta);
  if (kind == "dephasing") return ErrorChannel::dephasing(eta);
  throw std::invalid_argument("unknown gate noise: " + kind);
}

std::vector<cplx> ghz_amplitudes(int n) {
  std::vector<cplx> v(std::size_t{1} << n, 0.0);
  v.front() = v.back() = 1 / std::sqrt(2.0);
  return v;
}

std::vector<cplx> w_amplitudes(int n) {
  std::vector<cplx> v(std::size_t{1} << n, 0.0);
  for (int i = 0; i < n; ++i) v[std::size_t{1} << i] = 1 / std::sqrt(static_cast<double>(n));
  return v;
}

std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) e.emplace_back(q, q + 1);
      if (r + 1 < rows) e.emplace_back(q, q + cols);
    }
  return e;
}

double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  const double m = mean_of(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double stderr_of(const ObservableReport& r, std::uint64_t trials) {
  return std::sqrt(std::max(0.0, r.empirical_variance) / static_cast<double>(trials));
}

// ---------------------------------------------------------------- fig2abc

struct Arm {
  Method method;
  bool real_target;
  std::string name() const { return method_name(method) + (real_target ? "-real" : "-complex"); }
};

ExperimentResult run_fig2abc(const ExperimentSpec& s, const RunOptions& opt) {
  std::vector<Arm> arms;
  for (const auto& sc : s.schemes)
    for (const auto& t : s.targets) {
      require(t == "complex" || t == "real", "fig2abc targets are complex/real");
      const Method m = parse_method(sc);
      if (m == Method::Respovm && t == "complex") continue;
      arms.push_back({m, t == "real"});
    }
  require(!arms.empty(), "fig2abc: no valid scheme/target arm");
  const int n = s.n.front();
  const auto ne = static_cast<std::uint64_t>(s.experiments), nr = static_cast<std::uint64_t>(s.repetitions);
  const std::size_t na = arms.size(), nc = s.copies.size();
  const bool exact_ref = n <= 4;

  // mse[e][a][c], var[e][a]
  std::vector<std::vector<std::vector<double>>> mse(ne, std::vector<std::vector<double>>(na, std::vector<double>(nc)));
  std::vector<std::vector<double>> var(ne, std::vector<double>(na, 0.0));
  parallel_for(ne, opt.workers, [&](std::uint64_t e) {
    Rng srng = stream_rng(s.seed, 0, e, ne);
    const auto psi = random_pure_state(n, false, srng);
    const auto tc = random_pure_state(n, false, srng);
    const auto tr = random_pure_state(n, true, srng);
    const InputState in = DenseState::from_amplitudes(psi);
    for (std::size_t a = 0; a < na; ++a) {
      const Observable o = Observable::pure(arms[a].real_target ? tr : tc);
      const double truth = o.state_expectation(psi);
      if (exact_ref && arms[a].method != Method::Clifford)
        var[e][a] = exact_estimator_moments(scheme_of(arms[a].method), density_of(psi), o).variance();
      for (std::size_t c = 0; c < nc; ++c) {
        double acc = 0;
        for (std::uint64_t r = 0; r < nr; ++r) {
          ProtocolConfig cfg;
          cfg.method = arms[a].method;
          cfg.copies = s.copies[c];
          cfg.groups = s.groups;
          cfg.seed = stream_seed(s.seed, 1 + a * nc + c, e * nr + r, ne * nr);
          const double est = run_protocol(cfg, in, {o}).observables[0].estimate;
          acc += (est - truth) * (est - truth);
        }
        mse[e][a][c] = acc / static_cast<double>(nr);
      }
    }
  });

  ExperimentResult res;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t c = 0; c < nc; ++c) {
      const double nn = static_cast<double>(s.copies[c]);
      const bool ref = exact_ref && arms[a].method != Method::Clifford;
      std::vector<double> scaled;
      double vsum = 0;
      for (std::uint64_t e = 0; e < ne; ++e) {
        scaled.push_back(nn * mse[e][a][c]);
        vsum += var[e][a];
        ResultRow row{s.id, Params().add("arm", arms[a].name()).add("n", n).add("N", s.copies[c]).add("K", s.groups)
                                .add("experiment", e).str(),
                      nn * mse[e][a][c], std::nullopt, std::nullopt, nr * s.copies[c]};
        // Per-trial variance V gives MSE = 2V/N for K = 1.
        if (ref && s.groups == 1) row.reference = 2 * var[e][a];
        res.rows.push_back(row);
      }
      ResultRow sum{s.id, Params().add("arm", arms[a].name()).add("n", n).add("N", s.copies[c]).add("K", s.groups)
                              .add("experiment", "all").str(),
                    mean_of(scaled), std::nullopt, sd_of(scaled) / std::sqrt(static_cast<double>(ne)),
                    ne * nr * s.copies[c]};
      if (ref && s.groups == 1) sum.reference = 2 * vsum / static_cast<double>(ne);
      res.rows.push_back(sum);
    }
  return res;
}

// ---------------------------------------------------------------- fig2de

ExperimentResult run_fig2de(const ExperimentSpec& s, const RunOptions& opt) {
  const int n = s.n.front();
  const auto nr = static_cast<std::uint64_t>(s.repetitions);
  const std::size_t nk = s.prep_noise.size(), nc = s.copies.size(), nm = s.schemes.size();
  const std::uint64_t units = nm * nk * nc * nr;
  std::vector<double> est(units), se(units);
  std::vector<std::uint64_t> trials(units);
  const std::vector<SparseTerm> ghz{{0, 1 / std::sqrt(2.0)}, {low_mask(n), 1 / std::sqrt(2.0)}};
  const Observable o = Observable::pure_sparse(n, ghz);
  const InputState in = SparseState::ghz(n);
  parallel_for(units, opt.workers, [&](std::uint64_t u) {
    const std::uint64_t r = u % nr, c = (u / nr) % nc, k = (u / nr / nc) % nk, m = u / nr / nc / nk;
    ProtocolConfig cfg;
    cfg.method = parse_method(s.schemes[m]);
    cfg.copies = s.copies[c];
    cfg.groups = s.groups;
    cfg.seed = stream_seed(s.seed, u / nr, r, nr);
    cfg.sampler.noise.prep = prep_dist(s.prep_noise[k], s.eta_prep);
    const auto rep = run_protocol(cfg, in, {o});
    est[u] = rep.observables[0].estimate;
    se[u] = stderr_of(rep.observables[0], rep.trials);
    trials[u] = rep.trials;
  });
  ExperimentResult res;
  for (std::uint64_t b = 0; b < units / nr; ++b) {
    const std::uint64_t c = b % nc, k = (b / nc) % nk, m = b / nc / nk;
    const double ref = ghz_fidelity(n, prep_dist(s.prep_noise[k], s.eta_prep));
    double mse = 0;
    for (std::uint64_t r = 0; r < nr; ++r) {
      const std::uint64_t u = b * nr + r;
      const Params p = Params().add("scheme", s.schemes[m]).add("noise", s.prep_noise[k]).add("eta", s.eta_prep)
                           .add("n", n).add("N", s.copies[c]).add("rep", r);
      res.rows.push_back({s.id, p.str(), est[u], ref, se[u], trials[u]});
      mse += (est[u] - ref) * (est[u] - ref);
    }
    const Params p = Params().add("scheme", s.schemes[m]).add("noise", s.prep_noise[k]).add("eta", s.eta_prep)
                         .add("n", n).add("N", s.copies[c]).add("rep", "mse");
    res.rows.push_back({s.id, p.str(), mse / static_cast<double>(nr), std::nullopt, std::nullopt, nr * s.copies[c]});
  }
  return res;
}

// ---------------------------------------------------------------- fig3

ExperimentResult run_fig3(const ExperimentSpec& s, const RunOptions& opt) {
  const int rows = s.grid[0], cols = s.grid[1], n = rows * cols;
  const auto edges = grid_edges(rows, cols);
  const QuadraticState g = QuadraticState::graph(n, edges);
  Tableau t(n);
  for (int q = 0; q < n; ++q) t.apply(Gate{GateKind::H, q});
  for (auto [a, b] : edges) t.apply(Gate{GateKind::CZ, a, b});
  const InputState in = t;
  const Observable o = Observable::graph(g);

  const auto nr = static_cast<std::uint64_t>(s.repetitions);
  const std::size_t nk = s.prep_noise.size(), nc = s.copies.size(), nm = s.schemes.size();
  const std::uint64_t units = nm * nk * nc * nr;
  std::vector<double> est(units), se(units);
  std::vector<std::uint64_t> trials(units);
  parallel_for(units, opt.workers, [&](std::uint64_t u) {
    const std::uint64_t r = u % nr, c = (u / nr) % nc, k = (u / nr / nc) % nk, m = u / nr / nc / nk;
    ProtocolConfig cfg;
    cfg.method = parse_method(s.schemes[m]);
    cfg.copies = s.copies[c];
    cfg.groups = s.groups;
    cfg.seed = stream_seed(s.seed, u / nr, r, nr);
    cfg.sampler.noise.prep = prep_dist(s.prep_noise[k], s.eta_prep);
    const auto rep = run_protocol(cfg, in, {o});
    est[u] = rep.observables[0].estimate;
    se[u] = stderr_of(rep.observables[0], rep.trials);
    trials[u] = rep.trials;
  });

  std::vector<std::optional<double>> refs;
  for (const auto& k : s.prep_noise) {
    const PauliDist d = prep_dist(k, s.eta_prep);
    if (n <= kDensityOracleCap) {
      std::vector<cplx> v(std::size_t{1} << n);
      for (Bits x = 0; x < v.size(); ++x) v[x] = g.amplitude(x);
      refs.push_back(expectation(density_with_prep_noise(v, d), density_of(v)));
    } else {
      refs.push_back(graph_fidelity(g, d));
    }
  }

  ExperimentResult res;
  const std::string grid = std::to_string(rows) + "x" + std::to_string(cols);
  for (std::uint64_t b = 0; b < units / nr; ++b) {
    const std::uint64_t c = b % nc, k = (b / nc) % nk, m = b / nc / nk;
    std::vector<double> reps;
    for (std::uint64_t r = 0; r < nr; ++r) {
      const std::uint64_t u = b * nr + r;
      const Params p = Params().add("scheme", s.schemes[m]).add("grid", grid).add("noise", s.prep_noise[k])
                           .add("eta", s.eta_prep).add("N", s.copies[c]).add("K", s.groups).add("rep", r);
      res.rows.push_back({s.id, p.str(), est[u], refs[k], se[u], trials[u]});
      reps.push_back(est[u]);
    }
    const Params p = Params().add("scheme", s.schemes[m]).add("grid", grid).add("noise", s.prep_noise[k])
                         .add("eta", s.eta_prep).add("N", s.copies[c]).add("K", s.groups).add("rep", "median");
    res.rows.push_back({s.id, p.str(), median(reps), refs[k], sd_of(reps) / std::sqrt(static_cast<double>(nr)),
                        nr * s.copies[c]});
  }
  return res;
}

// ---------------------------------------------------------------- fig5bc

ExperimentResult run_fig5bc(const ExperimentSpec& s, const RunOptions& opt) {
  const int n = s.n.front();
  NoiseModel noisy;
  noisy.gate[static_cast<std::size_t>(GateClass::LongRange)] = gate_channel(s.gate_noise, s.eta_gate);
  ExperimentResult res;
  for (std::size_t t = 0; t < s.targets.size(); ++t) {
    const std::string& name = s.targets[t];
    require(name == "ghz" || name == "w", "fig5bc targets are ghz/w");
    const auto amps = name == "ghz" ? ghz_amplitudes(n) : w_amplitudes(n);
    const InputState in = DenseState::from_amplitudes(amps);
    const Observable o = Observable::pure(amps);
    for (std::size_t a = 0; a < s.schemes.size(); ++a) {
      const std::string& arm = s.schemes[a];
      for (std::size_t c = 0; c < s.copies.size(); ++c) {
        ProtocolConfig cfg;
        cfg.copies = s.copies[c];
        cfg.sampler.noise = noisy;
        if (arm == "plain") {
          cfg.method = Method::Respovm;
        } else if (arm == "gadgetized") {
          cfg.method = Method::Respovm;
          cfg.sampler.noise = gadgetize(noisy);
        } else if (arm == "clifford") {
          // Same trial count as the pair-based arms.
          cfg.method = Method::Clifford;
          cfg.copies = s.copies[c] / 2;
        } else {
          throw std::invalid_argument("fig5bc arms are plain/gadgetized/clifford");
        }
        cfg.workers = opt.workers;
        cfg.seed = stream_seed(s.seed, t, a * s.copies.size() + c, s.schemes.size() * s.copies.size());
        const auto rep = run_protocol(cfg, in, {o});
        const Params p = Params().add("state", name).add("arm", arm).add("n", n).add("gate_noise", s.gate_noise)
                             .add("eta", s.eta_gate).add("N", s.copies[c]);
        res.rows.push_back({s.id, p.str(), rep.observables[0].estimate, 1.0, stderr_of(rep.observables[0], rep.trials),
                            rep.trials});
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------- fig4b

ExperimentResult run_fig4b(const ExperimentSpec& s, const RunOptions& opt) {
  ExperimentResult res;
  const auto table = depth_comparison_table(s.n, s.bias);
  std::vector<std::array<double, 4>> measured(s.n.size());
  parallel_for(s.n.size(), opt.workers, [&](std::uint64_t i) {
    const int n = s.n[i];
    if (n > kMaxQubits) return;
    Rng rng = stream_rng(s.seed, 0, i, s.n.size());
    std::array<double, 4> acc{};
    for (int k = 0; k < s.labels; ++k) {
      const auto a = EqLabel::random(Scheme::Eq, n, rng);
      const auto cz = depth_and_counts(espovm_measurement_circuit(a));
      const auto ln = depth_and_counts(lnn_measurement_circuit(a));
      acc[0] += cz.two_qubit_depth;
      acc[1] += cz.depth;
      acc[2] += ln.two_qubit_depth;
      acc[3] += ln.depth;
    }
    for (auto& v : acc) v /= s.labels;
    measured[i] = acc;
  });
  const char* names[4] = {"cz-two-qubit-depth", "cz-total-depth", "lnn-cnot-depth", "lnn-total-depth"};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    const auto n = row.n;
    res.rows.push_back({s.id, Params().add("n", n).add("family", "espovm-bound").str(), row.espovm, std::nullopt, std::nullopt, 0});
    res.rows.push_back({s.id, Params().add("n", n).add("family", "clifford-bound").str(), row.clifford, std::nullopt, std::nullopt, 0});
    res.rows.push_back({s.id, Params().add("n", n).add("family", "approx-design").add("bias", s.bias).str(),
                        row.approx_design, std::nullopt, std::nullopt, 0});
    if (n > kMaxQubits) continue;
    for (int k = 0; k < 4; ++k)
      res.rows.push_back({s.id, Params().add("n", n).add("family", names[k]).str(), measured[i][static_cast<std::size_t>(k)],
                          std::nullopt, std::nullopt, static_cast<std::uint64_t>(s.labels)});
  }
  return res;
}

}  // namespace

// GHZ fidelity after an i.i.d. single-qubit Pauli channel: only X^0 and
// X^{1..1} with an even number of phase flips survive.
double ghz_fidelity(int n, const PauliDist& d) {
  const double i = d.p[0], x = d.p[1], y = d.p[2], z = d.p[3];
  return (std::pow(i + z, n) + std::pow(i - z, n) + std::pow(x + y, n) + std::pow(x - y, n)) / 2;
}

// Graph-state fidelity: X^x Z^z keeps |G> iff z = Gamma x. Enumerates x.
std::optional<double> graph_fidelity(const QuadraticState& g, const PauliDist& d) {
  if (d.p[1] == 0 && d.p[2] == 0) return std::pow(d.p[0], g.n);
  if (g.n > 20) return std::nullopt;
  double f = 0;
  for (Bits x = 0; x < (Bits{1} << g.n); ++x) {
    double pr = 1;
    for (int q = 0; q < g.n && pr > 0; ++q) {
      const bool xq = bit(x, q), zq = parity(g.adj[static_cast<std::size_t>(q)] & x);
      pr *= xq ? (zq ? d.p[2] : d.p[1]) : (zq ? d.p[3] : d.p[0]);
    }
    f += pr;
  }
  return f;
}

ExperimentSpec parse_spec(const json& j) {
  ExperimentSpec s;
  s.source = j;
  s.kind = value_of<std::string>(j, "kind", "");
  require(std::find(kKinds.begin(), kKinds.end(), s.kind) != kKinds.end(), "unknown experiment kind: " + s.kind);
  require(j.contains("seed"), "spec needs a seed");
  s.seed = j.at("seed").get<std::uint64_t>();
  s.id = value_of<std::string>(j, "id", s.kind);
  s.groups = value_of(j, "K", value_of(j, "groups", 1));
  s.experiments = value_of(j, "experiments", 200);
  s.repetitions = value_of(j, "repetitions", s.kind == "fig3" ? 20 : 50);
  s.eta_prep = value_of(j, "eta_prep", s.kind == "fig2de" || s.kind == "fig3" ? 0.05 : 0.0);
  s.eta_gate = value_of(j, "eta_gate", s.kind == "fig5bc" ? 0.05 : 0.0);
  s.gate_noise = value_of<std::string>(j, "gate_noise", "depolarizing");
  s.labels = value_of(j, "labels", s.kind == "fig4b" ? 20 : 50);
  s.bias = value_of(j, "bias", 0.01);
  s.long_run = value_of(j, "long", false);
  s.output = value_of<std::string>(j, "output", "");
  s.grid = list_of<int>(j, "grid", {2, 3});

  std::vector<int> dn{4};
  std::vector<std::string> dschemes{"respovm"}, dtargets;
  std::vector<std::uint64_t> dcopies{2000};
  std::vector<std::string> dprep{"none"};
  if (s.kind == "fig2abc") {
    dschemes = {"espovm", "respovm"};
    dtargets = {"complex", "real"};
  } else if (s.kind == "fig2de") {
    dn = {8};
    dprep = {"z", "x"};
    dcopies = {100, 200, 500, 1000, 2000, 5000};
  } else if (s.kind == "fig3") {
    dprep = {"z", "x", "depolarizing"};
    dcopies = {1000, 10000};
  } else if (s.kind == "fig5bc") {
    dn = {6};
    dschemes = {"plain", "gadgetized", "clifford"};
    dtargets = {"ghz", "w"};
    dcopies = {20000};
  } else if (s.kind == "fig4b") {
    dn = {10, 20, 50, 100};
  } else if (s.kind == "moments" || s.kind == "ic") {
    dn = {1, 2, 3};
  } else if (s.kind == "synth-verify") {
    dn = {3, 4, 5, 6, 7, 8};
  }
  s.n = list_of<int>(j, "n", dn);
  s.schemes = list_of<std::string>(j, "schemes", list_of<std::string>(j, "scheme", dschemes));
  s.targets = list_of<std::string>(j, "targets", dtargets);
  s.copies = list_of<std::uint64_t>(j, "N", list_of<std::uint64_t>(j, "copies", dcopies));
  s.prep_noise = list_of<std::string>(j, "prep_noise", dprep);

  require(!s.n.empty(), "n must be non-empty");
  // fig4b bound rows are analytic; circuits are only built up to 64 qubits.
  const int nlimit = s.kind == "fig4b" ? 4096 : kMaxQubits;
  for (int n : s.n) require(n >= 1 && n <= nlimit, "n outside [1, " + std::to_string(nlimit) + "]");
  require(s.experiments >= 1 && s.repetitions >= 1 && s.groups >= 1, "counts must be positive");
  for (auto c : s.copies) require(c >= 1, "N must be positive");
  for (const auto& k : s.prep_noise) prep_dist(k, s.eta_prep);
  require(s.eta_prep >= 0 && s.eta_prep <= 1 && s.eta_gate >= 0 && s.eta_gate <= 1, "rates must lie in [0,1]");
  const int cap = dense_qubit_cap();
  const int nmax = *std::max_element(s.n.begin(), s.n.end());
  if (s.kind == "fig2abc" || s.kind == "fig5bc") require(nmax <= cap, "n above the dense cap");
  if (s.kind == "moments") require(nmax <= 3, "moments oracle needs n <= 3");
  if (s.kind == "ic") require(nmax <= 4, "frame oracle needs n <= 4");
  if (s.kind == "synth-verify") require(nmax <= std::min(cap, 12), "synthesis oracle needs n within the dense cap");
  if (s.kind == "fig3") {
    require(s.grid.size() == 2 && s.grid[0] >= 1 && s.grid[1] >= 1, "grid is [rows, cols]");
    require(s.grid[0] * s.grid[1] <= kMaxQubits, "grid above 64 qubits");
  }
  if (s.kind == "fig2abc" || s.kind == "fig2de" || s.kind == "fig3") require(s.n.size() == 1 || s.kind == "fig3", "single n expected");
  return s;
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read spec " + path);
  return parse_spec(json::parse(f));
}

ExperimentResult run_experiment(const ExperimentSpec& s, const RunOptions& opt) {
  if (s.long_run && !opt.allow_long) throw std::invalid_argument("spec is flagged long; pass --long to run it");
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult res;
  if (s.kind == "fig2abc") res = run_fig2abc(s, opt);
  else if (s.kind == "fig2de") res = run_fig2de(s, opt);
  else if (s.kind == "fig3") res = run_fig3(s, opt);
  else if (s.kind == "fig5bc") res = run_fig5bc(s, opt);
  else if (s.kind == "fig4b") res = run_fig4b(s, opt);
  else if (s.kind == "moments") res = verify_moments(s.n);
  else if (s.kind == "ic") res = verify_ic(s.n);
  else res = verify_synth(s.n, s.labels, s.seed, opt.workers);
  for (auto& r : res.rows)
    if (r.experiment.empty() || s.kind == "moments" || s.kind == "ic" || s.kind == "synth-verify") r.experiment = s.id;
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

json make_manifest(const ExperimentSpec& s, const RunOptions& opt, const ExperimentResult& res) {
  json m;
  m["tool"] = "eqshadow";
  m["version"] = kVersion;
  m["csv_schema"] = kCsvSchema;
  m["columns"] = {"experiment", "params", "estimate", "reference", "squared_error", "stderr", "samples"};
  m["kind"] = s.kind;
  m["id"] = s.id;
  m["seed"] = s.seed;
  m["spec"] = s.source;
  m["workers"] = opt.workers;
  m["rows"] = res.rows.size();
  m["passed"] = res.passed;
  m["failures"] = res.failures;
  m["wall_seconds"] = res.wall_seconds;
  m["dense_cap"] = dense_qubit_cap();
  m["compiler"] = __VERSION__;
  m["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  return m;
}

OutputPaths write_outputs(const std::string& out, const ExperimentSpec& s, const RunOptions& opt,
                          const ExperimentResult& res) {
  const OutputPaths p = output_paths(out);
  write_text(p.csv, to_csv(res.rows));
  write_text(p.manifest, make_manifest(s, opt, res).dump(2) + "\n");
  return p;
}

}  // namespace eqshadow
