#include "eqshadow/synth/lnn.hpp"

#include <stdexcept>

#include "eqshadow/eqcore/bits.hpp"

namespace eqshadow {

int LnnPatterns::offset_j(int t) const {
  return n % 2 ? n - 3 - 2 * (t - 1) : n - 2 * t;
}

int lnn_blocks(int n) { return n % 2 ? (n - 1) / 2 : n / 2; }

LnnPatterns lnn_patterns(int n) {
  require_qubits(n);
  LnnPatterns p;
  p.n = n;
  auto twice = [](std::vector<int>& v, int x) {
    v.push_back(x);
    v.push_back(x);
  };
  if (n % 2) {
    if (n >= 3) p.pj.push_back(n - 1);
    for (int k = n - 3; k >= 2; k -= 2) twice(p.pj, k);
    for (int k = 1; k <= n - 2; k += 2) twice(p.pj, k);
    for (int k = 3; k <= n; k += 2) twice(p.pk, k);
    for (int k = n - 1; k >= 4; k -= 2) twice(p.pk, k);
    if (n >= 3) p.pk.push_back(2);
  } else {
    p.pj.push_back(n);
    for (int k = n - 2; k >= 2; k -= 2) twice(p.pj, k);
    for (int k = 1; k <= n - 3; k += 2) twice(p.pj, k);
    p.pj.push_back(n - 1);
    for (int k = 3; k <= n - 1; k += 2) twice(p.pk, k);
    for (int k = n; k >= 2; k -= 2) twice(p.pk, k);
  }
  return p;
}

std::vector<Layer> lnn_cnot_layers(int n) {
  require_qubits(n);
  // Four alternating layer types on 1-based wires, converted to 0-based gates.
  std::vector<Layer> out;
  for (int l = 0; l < 2 * n + 2; ++l) {
    Layer layer;
    switch (l % 4) {
      case 0:  // odd -> right neighbour
        for (int i = 1; i + 1 <= n; i += 2) layer.push_back({GateKind::CNOT, i - 1, i});
        break;
      case 1:  // odd -> left neighbour
        for (int i = 3; i <= n; i += 2) layer.push_back({GateKind::CNOT, i - 1, i - 2});
        break;
      case 2:  // even -> left neighbour
        for (int i = 1; i + 1 <= n; i += 2) layer.push_back({GateKind::CNOT, i, i - 1});
        break;
      default:  // even -> right neighbour
        for (int i = 2; i + 1 <= n; i += 2) layer.push_back({GateKind::CNOT, i - 1, i});
        break;
    }
    out.push_back(std::move(layer));
  }
  return out;
}

std::map<Interval, std::pair<int, int>> lnn_interval_slots(int n) {
  require_qubits(n);
  // Wire contents as bit sets over x_1..x_n (bit k-1 for x_k).
  std::vector<Bits> wire(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) wire[static_cast<std::size_t>(i)] = Bits{1} << i;
  const auto layers = lnn_cnot_layers(n);
  std::map<Interval, std::pair<int, int>> slots;
  for (int t = 0; t <= lnn_blocks(n); ++t) {
    if (t > 0)
      for (int l = 4 * (t - 1); l < 4 * t; ++l)
        for (const auto& g : layers[static_cast<std::size_t>(l)])
          wire[static_cast<std::size_t>(g.q1)] ^= wire[static_cast<std::size_t>(g.q0)];
    for (int w = 0; w < n; ++w) {
      const Bits s = wire[static_cast<std::size_t>(w)];
      const int lo = std::countr_zero(s), hi = 63 - std::countl_zero(s);
      if (s != (low_mask(hi + 1) & ~low_mask(lo))) continue;  // not contiguous
      slots.emplace(Interval{lo + 1, hi + 1}, std::make_pair(t, w + 1));
    }
  }
  return slots;
}

namespace {

// Expands i^{u * XOR(set)} into terms over at most two y variables.
void expand(Bits set, int u, std::map<Bits, int>& acc) {
  set &= ~Bits{1};  // y_0 = 0
  u = ((u % 4) + 4) % 4;
  if (!set || !u) return;
  if (weight(set) <= 2) {
    acc[set] = (acc[set] + u) % 4;
    return;
  }
  // i^{a^b^c} = i^{3a+3b+3c+3(a^b)+3(a^c)+3(b^c)}
  const Bits a = set & (~set + 1);
  const Bits rest = set ^ a;
  const Bits b = rest & (~rest + 1);
  const Bits c = rest ^ b;
  for (Bits s : {a, b, c, a ^ b, a ^ c, b ^ c}) expand(s, 3 * u, acc);
}

}  // namespace

std::vector<YTerm> decompose_cz_phase(int mu, int nu) {
  if (mu < 1 || nu <= mu) throw std::invalid_argument("decompose_cz_phase needs 1 <= mu < nu");
  // x_k = y_k ^ y_{k-1}; bit k stands for y_k.
  const Bits xm = (Bits{1} << mu) | (Bits{1} << (mu - 1));
  const Bits xn = (Bits{1} << nu) | (Bits{1} << (nu - 1));
  std::map<Bits, int> acc;
  // (-1)^{ab} = i^{3a + 3b + (a^b)}
  expand(xm, 3, acc);
  expand(xn, 3, acc);
  expand(xm ^ xn, 1, acc);
  std::vector<YTerm> out;
  for (const auto& [s, e] : acc) {
    if (!e) continue;
    const int lo = std::countr_zero(s), hi = 63 - std::countl_zero(s);
    out.push_back(lo == hi ? YTerm{0, hi, e} : YTerm{lo, hi, e});
  }
  return out;
}

namespace {

Gate phase_gate(int wire, int e) {
  switch (e) {
    case 1: return {GateKind::S, wire};
    case 2: return {GateKind::Z, wire};
    default: return {GateKind::Sdg, wire};
  }
}

bool idle(const Layer& l, int q) {
  for (const auto& g : l)
    if (g.q0 == q || (g.two_qubit() && g.q1 == q)) return false;
  return true;
}

}  // namespace

Circuit lnn_synthesize(const EqLabel& a) {
  const int n = a.num_qubits();
  std::map<Interval, int> coeff;
  for (int q = 0; q < n; ++q) coeff[{q + 1, q + 1}] += a.phase_diag_coefficient(q);
  for (auto [i, j] : a.edges())
    for (const auto& t : decompose_cz_phase(i + 1, j + 1)) coeff[t.interval()] += t.exponent;

  auto raw = lnn_cnot_layers(n);
  const auto slots = lnn_interval_slots(n);
  std::vector<Layer> extra(raw.size() + 1);
  for (const auto& [iv, e] : coeff) {
    const int u = e % 4;
    if (!u) continue;
    const auto [t, w1] = slots.at(iv);
    const int w = w1 - 1;
    const std::size_t b = static_cast<std::size_t>(4 * t);
    const Gate g = phase_gate(w, u);
    if (b < raw.size() && idle(raw[b], w)) raw[b].push_back(g);
    else if (b > 0 && idle(raw[b - 1], w)) raw[b - 1].push_back(g);
    else extra[b].push_back(g);
  }
  Circuit c(n);
  for (std::size_t b = 0; b <= raw.size(); ++b) {
    if (!extra[b].empty()) c.add_layer(std::move(extra[b]));
    if (b < raw.size() && !raw[b].empty()) c.add_layer(std::move(raw[b]));
  }
  c.set_reverse_outcome(n > 1);
  return c;
}

Circuit lnn_measurement_circuit(const EqLabel& a) {
  EqLabel conj = a;
  for (int q = 0; q < a.num_qubits(); ++q) conj.set_diag(q, -a.diag(q));
  Circuit c = lnn_synthesize(conj);
  Layer h;
  for (int q = 0; q < a.num_qubits(); ++q) h.push_back({GateKind::H, q});
  c.add_layer(std::move(h));
  c.measure_all(Basis::Z);
  return c;
}

}  // namespace eqshadow
