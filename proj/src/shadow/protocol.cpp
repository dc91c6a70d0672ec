#include "eqshadow/shadow/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "eqshadow/shadow/clifford_baseline.hpp"
#include "eqshadow/shadow/estimator.hpp"

namespace eqshadow {

std::string method_name(Method m) {
  switch (m) {
    case Method::Espovm: return "espovm";
    case Method::Respovm: return "respovm";
    case Method::Clifford: return "clifford";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "espovm" || s == "eq") return Method::Espovm;
  if (s == "respovm" || s == "req") return Method::Respovm;
  if (s == "clifford") return Method::Clifford;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

Scheme scheme_of(Method m) { return m == Method::Respovm ? Scheme::Req : Scheme::Eq; }

std::uint64_t trials_per_group(const ProtocolConfig& cfg) {
  if (cfg.groups < 1) throw std::invalid_argument("group count must be positive");
  const auto k = static_cast<std::uint64_t>(cfg.groups);
  if (cfg.copies == 0 || cfg.copies % k != 0) throw std::invalid_argument("copies must equal N' * K");
  const std::uint64_t per = cfg.copies / k;
  if (cfg.method == Method::Clifford) return per;
  if (per < 2 || per % 2 != 0) throw std::invalid_argument("copies per group must be even");
  return per / 2;
}

void parallel_for(std::uint64_t count, int workers, const std::function<void(std::uint64_t)>& body) {
  const int w = std::max(1, workers);
  if (w == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  constexpr std::uint64_t kChunk = 32;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto run = [&] {
    try {
      for (;;) {
        const std::uint64_t lo = next.fetch_add(kChunk);
        if (lo >= count) return;
        for (std::uint64_t i = lo; i < std::min(count, lo + kChunk); ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lk(err_mu);
      if (!err) err = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

EstimateReport run_protocol(const ProtocolConfig& cfg, const InputState& psi, const std::vector<Observable>& obs) {
  const std::uint64_t per = trials_per_group(cfg);
  const int n = num_qubits(psi);
  if (obs.empty()) throw std::invalid_argument("no observables");
  const Scheme scheme = scheme_of(cfg.method);
  for (const auto& o : obs) {
    if (o.num_qubits() != n) throw std::invalid_argument("observable and state sizes differ");
    if (cfg.method == Method::Respovm && !o.is_real()) throw std::invalid_argument("respovm needs real observables");
  }
  const bool need_basis =
      std::any_of(obs.begin(), obs.end(), [](const Observable& o) { return o.kind() != Observable::Kind::Graph; });

  const std::size_t m = obs.size();
  const std::uint64_t total = per * static_cast<std::uint64_t>(cfg.groups);
  std::vector<double> values(total * m);
  parallel_for(total, cfg.workers, [&](std::uint64_t t) {
    Rng rng = stream_rng(cfg.seed, t / per, t % per, per);
    double* row = values.data() + t * m;
    if (cfg.method == Method::Clifford) {
      const CliffordDraw d = sample_clifford_shadow(psi, cfg.sampler, rng);
      for (std::size_t j = 0; j < m; ++j) row[j] = clifford_estimate(d, obs[j]);
      return;
    }
    const EspovmDraw d = sample_espovm(psi, scheme, cfg.sampler, rng);
    const Bits p2 = need_basis ? sample_computational(psi, cfg.sampler, rng) : 0;
    for (std::size_t j = 0; j < m; ++j) row[j] = estimate_unchecked(scheme, d.label, p2, obs[j]);
  });

  EstimateReport rep;
  rep.method = cfg.method;
  rep.copies = cfg.copies;
  rep.groups = cfg.groups;
  rep.trials = total;
  for (std::size_t j = 0; j < m; ++j) {
    ObservableReport r;
    double sum = 0, sumsq = 0;
    for (int g = 0; g < cfg.groups; ++g) {
      double gs = 0;
      for (std::uint64_t i = 0; i < per; ++i) {
        const double v = values[(static_cast<std::uint64_t>(g) * per + i) * m + j];
        gs += v;
        sumsq += v * v;
      }
      sum += gs;
      r.group_means.push_back(gs / static_cast<double>(per));
    }
    r.estimate = median(r.group_means);
    const double mean = sum / static_cast<double>(total);
    r.empirical_variance = total > 1 ? (sumsq - total * mean * mean) / static_cast<double>(total - 1) : 0.0;
    r.traceless_norm_sq = obs[j].traceless_norm_sq();
    r.variance_bound = cfg.method == Method::Clifford ? 3.0 * r.traceless_norm_sq : variance_bound(scheme, obs[j]);
    r.copy_bound = copy_bound(r.variance_bound, cfg.eps, cfg.delta, m);
    rep.observables.push_back(std::move(r));
  }
  return rep;
}

}  // namespace eqshadow
