#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eqshadow/shadow/observable.hpp"
#include "eqshadow/shadow/sampler.hpp"

namespace eqshadow {

enum class Method { Espovm, Respovm, Clifford };
std::string method_name(Method m);
Method parse_method(std::string_view s);
Scheme scheme_of(Method m);  // Clifford maps to Eq, unused

struct ProtocolConfig {
  Method method = Method::Espovm;
  std::uint64_t copies = 2000;  // N = N' K
  int groups = 1;               // K
  std::uint64_t seed = 0;
  int workers = 1;
  SamplerSettings sampler;
  double eps = 0.1;  // copy-bound inputs only
  double delta = 0.05;
};

// Trials per group: N'/2 copy pairs, or N' single copies for the Clifford
// baseline. Throws on an invalid split.
std::uint64_t trials_per_group(const ProtocolConfig& cfg);

struct ObservableReport {
  double estimate = 0;  // median of group means
  std::vector<double> group_means;
  double empirical_variance = 0;  // per trial
  double traceless_norm_sq = 0;
  double variance_bound = 0;
  std::uint64_t copy_bound = 0;
};

struct EstimateReport {
  Method method = Method::Espovm;
  std::uint64_t copies = 0;
  int groups = 0;
  std::uint64_t trials = 0;
  std::vector<ObservableReport> observables;
};

EstimateReport run_protocol(const ProtocolConfig& cfg, const InputState& psi, const std::vector<Observable>& obs);

// Runs body(index) for index in [0, count) on `workers` threads.
void parallel_for(std::uint64_t count, int workers, const std::function<void(std::uint64_t)>& body);

}  // namespace eqshadow
