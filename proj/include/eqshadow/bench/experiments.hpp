#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqshadow/bench/report.hpp"
#include "eqshadow/eqcore/quadratic.hpp"
#include "eqshadow/qsim/noise.hpp"

namespace eqshadow {

// Parsed experiment spec. Scalars given as lists (or vice versa) are
// accepted for n, N and the string lists.
struct ExperimentSpec {
  std::string kind;  // fig2abc fig2de fig3 fig5bc fig4b moments ic synth-verify
  std::string id;
  std::uint64_t seed = 0;
  std::vector<int> n;
  std::vector<std::string> schemes;
  std::vector<std::string> targets;
  std::vector<std::uint64_t> copies;
  int groups = 1;
  int experiments = 200;
  int repetitions = 50;
  double eta_prep = 0.0;
  std::vector<std::string> prep_noise;
  double eta_gate = 0.0;
  std::string gate_noise = "depolarizing";
  std::vector<int> grid;
  int labels = 50;
  double bias = 0.01;
  bool long_run = false;
  std::string output;
  nlohmann::json source;
};

// Throws std::invalid_argument on unknown kinds, missing seed, or values
// outside backend caps.
ExperimentSpec parse_spec(const nlohmann::json& j);
ExperimentSpec load_spec(const std::string& path);

struct RunOptions {
  int workers = 1;
  bool allow_long = false;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  bool passed = true;  // oracle suites only; figure runs always pass
  std::vector<std::string> failures;
  double wall_seconds = 0;
};

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& opt);

// Run manifest: spec, seed, versions, schema, wall time, worker count.
nlohmann::json make_manifest(const ExperimentSpec& spec, const RunOptions& opt, const ExperimentResult& res);

// Writes <out>.csv and <out>.json.
OutputPaths write_outputs(const std::string& out, const ExperimentSpec& spec, const RunOptions& opt,
                          const ExperimentResult& res);

// Closed-form fidelities under an i.i.d. single-qubit Pauli channel.
double ghz_fidelity(int n, const PauliDist& d);
// Empty when the channel has X/Y weight and n > 20.
std::optional<double> graph_fidelity(const QuadraticState& g, const PauliDist& d);

// Oracle suites, also used by `verify`.
ExperimentResult verify_moments(const std::vector<int>& ns);
ExperimentResult verify_ic(const std::vector<int>& ns);
ExperimentResult verify_synth(const std::vector<int>& ns, int labels, std::uint64_t seed, int workers);

}  // namespace eqshadow
