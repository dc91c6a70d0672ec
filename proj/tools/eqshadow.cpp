#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eqshadow/bench/experiments.hpp"
#include "eqshadow/synth/espovm_circuit.hpp"
#include "eqshadow/synth/lnn.hpp"
#include "eqshadow/synth/metrics.hpp"

using namespace eqshadow;

namespace {

void print_summary(const ExperimentResult& res) {
  std::cerr << res.rows.size() << " rows, " << format_number(res.wall_seconds) << " s\n";
  for (const auto& f : res.failures) std::cerr << "FAIL " << f << "\n";
}

nlohmann::json metrics_json(const CircuitMetrics& m) {
  return {{"depth", m.depth},
          {"two_qubit_depth", m.two_qubit_depth},
          {"single_qubit_count", m.single_qubit_count},
          {"cz_count", m.cz_count},
          {"cnot_count", m.cnot_count},
          {"nn_cnot_count", m.nn_cnot_count},
          {"nn_cz_count", m.nn_cz_count},
          {"only_nearest_neighbor", m.only_nearest_neighbor}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equatorial-stabilizer shadow tomography toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
  bool allow_long = false;

  auto* run = app.add_subcommand("run", "run an experiment spec");
  std::string spec_path;
  run->add_option("spec", spec_path, "spec JSON file")->required();
  auto* seed_opt = run->add_option("--seed", seed, "override the spec seed");
  run->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
  run->add_option("--out", out, "output prefix (<out>.csv, <out>.json)");
  run->add_flag("--long", allow_long, "allow specs flagged long");

  auto* synth = app.add_subcommand("synth", "measurement circuit for a label");
  std::string label;
  bool lnn = false;
  synth->add_option("--label", label, "label, e.g. eq:3:012:101")->required();
  synth->add_flag("--lnn", lnn, "nearest-neighbour synthesis");
  synth->add_option("--out", out, "circuit file; report goes to <out>.json");

  auto* verify = app.add_subcommand("verify", "oracle suites");
  std::string suite;
  verify->add_option("suite", suite, "moments | ic | synth")
      ->required()
      ->check(CLI::IsMember({"moments", "ic", "synth"}));
  verify->add_option("--seed", seed, "seed for random labels");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
  verify->add_option("--out", out, "output prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      nlohmann::json j;
      {
        std::ifstream f(spec_path);
        if (!f) throw std::invalid_argument("cannot read spec " + spec_path);
        j = nlohmann::json::parse(f);
      }
      if (*seed_opt) j["seed"] = seed;
      const ExperimentSpec spec = parse_spec(j);
      const RunOptions opt{workers, allow_long};
      const ExperimentResult res = run_experiment(spec, opt);
      const std::string prefix = !out.empty() ? out : !spec.output.empty() ? spec.output : spec.id;
      const auto paths = write_outputs(prefix, spec, opt, res);
      std::cout << paths.csv << "\n" << paths.manifest << "\n";
      print_summary(res);
      return res.passed ? 0 : 1;
    }
    if (*synth) {
      const EqLabel a = EqLabel::parse(label);
      const Circuit c = lnn ? lnn_measurement_circuit(a) : espovm_measurement_circuit(a);
      nlohmann::json report = metrics_json(depth_and_counts(c));
      report["label"] = a.to_string();
      report["synthesis"] = lnn ? "lnn" : "cz-layers";
      report["qubits"] = a.num_qubits();
      if (out.empty()) {
        std::cout << c.to_text() << report.dump(2) << "\n";
      } else {
        write_text(out, c.to_text());
        write_text(out + ".json", report.dump(2) + "\n");
      }
      return 0;
    }
    ExperimentSpec spec;
    spec.kind = suite == "synth" ? "synth-verify" : suite;
    spec.id = spec.kind;
    spec.seed = seed;
    spec.source = {{"kind", spec.kind}, {"seed", seed}};
    spec = parse_spec(spec.source);
    const RunOptions opt{workers, false};
    const ExperimentResult res = run_experiment(spec, opt);
    if (!out.empty()) write_outputs(out, spec, opt, res);
    std::cout << to_csv(res.rows);
    print_summary(res);
    return res.passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
