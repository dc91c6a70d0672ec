#include "eqshadow/synth/clifford.hpp"

#include <stdexcept>

#include "eqshadow/synth/espovm_circuit.hpp"

namespace eqshadow {

MallowsSample sample_quantum_mallows(int n, Rng& rng) {
  if (n < 1 || n > 31) throw std::invalid_argument("Clifford sampling supports 1 <= n <= 31");
  MallowsSample s;
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < n; ++i) {
    const int m = n - i;
    // P(index = k) proportional to 2^{2m-1-k}, k = 0..2m-1.
    const std::uint64_t v = uniform_below(rng, (std::uint64_t{1} << (2 * m)) - 1) + 1;
    const int j = 63 - std::countl_zero(v);
    const int index = 2 * m - 1 - j;
    const bool had = index < m;
    const int k = had ? index : 2 * m - index - 1;
    if (had) s.hadamards |= Bits{1} << i;
    s.perm.push_back(pool[static_cast<std::size_t>(k)]);
    pool.erase(pool.begin() + k);
  }
  return s;
}

namespace {

// Random Hadamard-free block as a gate list.
std::vector<Gate> hadamard_free_block(int n, Rng& rng) {
  std::vector<Gate> g;
  for (int i = 0; i < n; ++i)
    if (rng() & 1u) g.push_back({GateKind::S, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1u) g.push_back({GateKind::CZ, i, j});
  // x_i <- x_i ^ sum_{j<i} D_ij x_j, rows handled from the bottom up.
  std::vector<Gate> cx;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (rng() & 1u) cx.push_back({GateKind::CNOT, j, i});
  for (int i = n - 1; i >= 0; --i)
    for (const auto& c : cx)
      if (c.q1 == i) g.push_back(c);
  return g;
}

}  // namespace

CliffordSample sample_clifford(int n, Rng& rng) {
  const MallowsSample w = sample_quantum_mallows(n, rng);
  const auto f1 = hadamard_free_block(n, rng);
  const auto f2 = hadamard_free_block(n, rng);

  CliffordSample out;
  Circuit c = schedule_asap(n, f2);
  out.hf_layers = static_cast<int>(c.layers().size());

  // Qubit permutation: contents of wire perm[i] move to wire i.
  std::vector<int> where(static_cast<std::size_t>(n)), at(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) where[static_cast<std::size_t>(q)] = at[static_cast<std::size_t>(q)] = q;
  std::vector<Gate> swaps;
  for (int i = 0; i < n; ++i) {
    const int src = where[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(i)])];
    if (src == i) continue;
    swaps.push_back({GateKind::CNOT, i, src});
    swaps.push_back({GateKind::CNOT, src, i});
    swaps.push_back({GateKind::CNOT, i, src});
    const int displaced = at[static_cast<std::size_t>(i)];
    at[static_cast<std::size_t>(src)] = displaced;
    where[static_cast<std::size_t>(displaced)] = src;
    at[static_cast<std::size_t>(i)] = w.perm[static_cast<std::size_t>(i)];
    where[static_cast<std::size_t>(w.perm[static_cast<std::size_t>(i)])] = i;
  }
  c.append(schedule_asap(n, swaps));

  Layer h;
  for (int q = 0; q < n; ++q)
    if (bit(w.hadamards, q)) h.push_back({GateKind::H, q});
  if (!h.empty()) {
    out.h_layer_index = static_cast<int>(c.layers().size());
    c.add_layer(std::move(h));
  }
  c.append(schedule_asap(n, f1));

  Layer px, pz;
  for (int q = 0; q < n; ++q) {
    if (rng() & 1u) px.push_back({GateKind::X, q});
    if (rng() & 1u) pz.push_back({GateKind::Z, q});
  }
  if (!px.empty()) c.add_layer(std::move(px));
  if (!pz.empty()) c.add_layer(std::move(pz));
  out.circuit = std::move(c);
  return out;
}

}  // namespace eqshadow
