#include "eqshadow/eqcore/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace eqshadow {

namespace {

inline int mod4(int v) { return ((v % 4) + 4) % 4; }

// Toggles every edge inside the vertex set s.
void toggle_clique(std::vector<Bits>& adj, Bits s) {
  for (Bits r = s; r; r &= r - 1) {
    const int l = std::countr_zero(r);
    adj[static_cast<std::size_t>(l)] ^= s & ~(Bits{1} << l);
  }
}

}  // namespace

void Z4QuadraticForm::toggle_edge(int i, int j) {
  adj[static_cast<std::size_t>(i)] ^= Bits{1} << j;
  adj[static_cast<std::size_t>(j)] ^= Bits{1} << i;
}

int Z4QuadraticForm::eval(Bits x) const {
  int v = constant, cross = 0;
  for (Bits r = x; r; r &= r - 1) {
    const int i = std::countr_zero(r);
    v += linear[static_cast<std::size_t>(i)];
    cross += weight(adj[static_cast<std::size_t>(i)] & x);
  }
  return mod4(v + cross);  // cross = 2 * (number of edges inside x)
}

cplx exponential_sum(Z4QuadraticForm f) {
  require_qubits(f.n);
  for (auto& d : f.linear) d = mod4(d);
  Bits active = low_mask(f.n);
  cplx scale = 1.0;
  int constant = mod4(f.constant);

  auto remove = [&](int v) {
    const Bits nb = f.adj[static_cast<std::size_t>(v)] & active;
    for (Bits r = nb; r; r &= r - 1)
      f.adj[static_cast<std::size_t>(std::countr_zero(r))] &= ~(Bits{1} << v);
    f.adj[static_cast<std::size_t>(v)] = 0;
    active &= ~(Bits{1} << v);
    return nb;
  };

  while (active) {
    const int k = 63 - std::countl_zero(active);
    const int d = mod4(f.linear[static_cast<std::size_t>(k)]);
    const Bits nb = remove(k);
    if (d % 2 == 1) {
      // 1 + i^d (-1)^L = (1 + i^d) i^{-d L}, L lifted to Z4.
      scale *= 1.0 + ipow(d);
      for (Bits r = nb; r; r &= r - 1) {
        auto& lin = f.linear[static_cast<std::size_t>(std::countr_zero(r))];
        lin = mod4(lin - d);
      }
      toggle_clique(f.adj, nb);
      continue;
    }
    const int s = d / 2;  // summing x_k forces L(x) = s
    if (nb == 0) {
      if (s) return 0.0;
      scale *= 2.0;
      continue;
    }
    scale *= 2.0;
    const int j = std::countr_zero(nb);
    const Bits t = nb & ~(Bits{1} << j);
    const int dj = mod4(f.linear[static_cast<std::size_t>(j)]);
    const Bits nj = remove(j);
    // x_j = s + (1 - 2s) sum_T x_l - 2 sum_{l<m in T} x_l x_m  (mod 4)
    constant = mod4(constant + dj * s);
    for (Bits r = t; r; r &= r - 1) {
      auto& lin = f.linear[static_cast<std::size_t>(std::countr_zero(r))];
      lin = mod4(lin + dj * (1 - 2 * s));
    }
    if (dj % 2 == 1) toggle_clique(f.adj, t);
    // 2 x_j sum_{m in N(j)} x_m with x_j taken mod 2.
    if (s) {
      for (Bits r = nj; r; r &= r - 1) {
        auto& lin = f.linear[static_cast<std::size_t>(std::countr_zero(r))];
        lin = mod4(lin + 2);
      }
    }
    for (Bits r = t; r; r &= r - 1) {
      const int l = std::countr_zero(r);
      f.adj[static_cast<std::size_t>(l)] ^= nj & ~(Bits{1} << l);
      if ((nj >> l) & 1u) {
        auto& lin = f.linear[static_cast<std::size_t>(l)];
        lin = mod4(lin + 2);
      }
    }
    for (Bits r = nj; r; r &= r - 1) {
      const int m = std::countr_zero(r);
      f.adj[static_cast<std::size_t>(m)] ^= t & ~(Bits{1} << m);
    }
  }
  return scale * ipow(constant);
}

cplx exponential_sum_bruteforce(const Z4QuadraticForm& f) {
  require_qubits(f.n, 24);
  int counts[4] = {0, 0, 0, 0};
  const Bits dim = Bits{1} << f.n;
  for (Bits x = 0; x < dim; ++x) ++counts[f.eval(x)];
  return {static_cast<double>(counts[0] - counts[2]), static_cast<double>(counts[1] - counts[3])};
}

QuadraticState QuadraticState::graph(int n, const std::vector<std::pair<int, int>>& edges) {
  require_qubits(n);
  QuadraticState g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bad graph edge");
    g.adj[static_cast<std::size_t>(i)] |= Bits{1} << j;
    g.adj[static_cast<std::size_t>(j)] |= Bits{1} << i;
  }
  return g;
}

cplx QuadraticState::amplitude(Bits x) const {
  int cross = 0;
  for (Bits r = x; r; r &= r - 1) cross += weight(adj[static_cast<std::size_t>(std::countr_zero(r))] & x);
  const int sign = ((cross / 2) + parity(linear & x)) & 1;
  return ipow(global_phase + 2 * sign) * std::pow(2.0, -0.5 * n);
}

cplx gauss_overlap(const EqLabel& a, const QuadraticState& psi) {
  const int n = a.num_qubits();
  if (psi.n != n) throw std::invalid_argument("gauss_overlap: size mismatch");
  Z4QuadraticForm f(n);
  f.constant = psi.global_phase;
  for (int i = 0; i < n; ++i) {
    f.linear[static_cast<std::size_t>(i)] = -a.phase_diag_coefficient(i) + 2 * bit(psi.linear, i);
    f.adj[static_cast<std::size_t>(i)] = a.neighbors(i) ^ psi.adj[static_cast<std::size_t>(i)];
  }
  return exponential_sum(std::move(f)) * std::ldexp(1.0, -n);
}

cplx overlap_dense(const EqLabel& a, const std::vector<cplx>& psi) {
  const int n = a.num_qubits();
  if (psi.size() != (std::size_t{1} << n)) throw std::invalid_argument("overlap_dense: size mismatch");
  cplx acc = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) acc += ipow(-a.phase(x)) * psi[x];
  return acc * std::pow(2.0, -0.5 * n);
}

cplx overlap_sparse(const EqLabel& a, const std::vector<SparseTerm>& psi) {
  cplx acc = 0.0;
  for (const auto& t : psi) acc += ipow(-a.phase(t.basis)) * t.amp;
  return acc * std::pow(2.0, -0.5 * a.num_qubits());
}

}  // namespace eqshadow
