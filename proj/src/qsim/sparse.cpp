#include "eqshadow/qsim/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "eqshadow/qsim/dense.hpp"

namespace eqshadow {

SparseState::SparseState(int n, std::vector<SparseTerm> terms) : n_(n), terms_(std::move(terms)) {
  require_qubits(n);
  for (const auto& t : terms_)
    if (t.basis & ~low_mask(n)) throw std::invalid_argument("basis string exceeds qubit count");
  merge();
}

SparseState SparseState::ghz(int n) {
  const double r = 1.0 / std::sqrt(2.0);
  return SparseState(n, {{0, r}, {low_mask(n), r}});
}

SparseState SparseState::w(int n) {
  std::vector<SparseTerm> t;
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) t.push_back({Bits{1} << i, r});
  return SparseState(n, std::move(t));
}

void SparseState::merge() {
  std::map<Bits, cplx> acc;
  for (const auto& t : terms_) acc[t.basis] += t.amp;
  terms_.clear();
  for (const auto& [b, a] : acc)
    if (std::abs(a) > 1e-15) terms_.push_back({b, a});
}

void SparseState::apply(const Gate& g) {
  const Bits m0 = Bits{1} << g.q0;
  const Bits m1 = g.two_qubit() ? Bits{1} << g.q1 : 0;
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      std::vector<SparseTerm> out;
      out.reserve(terms_.size() * 2);
      for (const auto& t : terms_) {
        const bool one = t.basis & m0;
        out.push_back({t.basis & ~m0, t.amp * r});
        out.push_back({t.basis | m0, one ? -t.amp * r : t.amp * r});
      }
      terms_ = std::move(out);
      merge();
      return;
    }
    case GateKind::S:
      for (auto& t : terms_)
        if (t.basis & m0) t.amp *= cplx(0, 1);
      return;
    case GateKind::Sdg:
      for (auto& t : terms_)
        if (t.basis & m0) t.amp *= cplx(0, -1);
      return;
    case GateKind::Z:
      for (auto& t : terms_)
        if (t.basis & m0) t.amp = -t.amp;
      return;
    case GateKind::X:
    case GateKind::Y:
      for (auto& t : terms_) {
        if (g.kind == GateKind::Y) t.amp *= (t.basis & m0) ? cplx(0, -1) : cplx(0, 1);
        t.basis ^= m0;
      }
      break;
    case GateKind::CZ:
      for (auto& t : terms_)
        if ((t.basis & m0) && (t.basis & m1)) t.amp = -t.amp;
      return;
    case GateKind::CNOT:
      for (auto& t : terms_)
        if (t.basis & m0) t.basis ^= m1;
      break;
  }
  std::sort(terms_.begin(), terms_.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.basis < b.basis; });
}

void SparseState::apply(const Circuit& c) {
  for (const auto& layer : c.layers())
    for (const auto& g : layer) apply(g);
}

void SparseState::apply_pauli(Bits x, Bits z) {
  for (auto& t : terms_) {
    if (parity(t.basis & z)) t.amp = -t.amp;
    t.basis ^= x;
  }
  if (x) std::sort(terms_.begin(), terms_.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.basis < b.basis; });
}

cplx SparseState::amplitude(Bits x) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                             [](const SparseTerm& t, Bits v) { return t.basis < v; });
  return (it != terms_.end() && it->basis == x) ? it->amp : cplx(0.0);
}

double SparseState::norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::norm(t.amp);
  return std::sqrt(s);
}

Bits SparseState::sample(Rng& rng) const {
  std::vector<double> p;
  p.reserve(terms_.size());
  for (const auto& t : terms_) p.push_back(std::norm(t.amp));
  return terms_.at(sample_index(p, rng)).basis;
}

Bits sample_hadamard_sparse(int n, const std::vector<SparseTerm>& beta, Rng& rng) {
  // Marginal of prefix p_0..p_m:
  //   2^{-(m+1)} sum_{j,k: d_jk inside prefix} beta_j conj(beta_k) (-1)^{p.d_jk}
  // with d_jk = x_j ^ x_k. Pairs enter once their highest differing bit is
  // reached.
  struct Pair {
    Bits diff;
    cplx w;
  };
  std::vector<std::vector<Pair>> by_top(static_cast<std::size_t>(n));
  double diag = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    diag += std::norm(beta[j].amp);
    for (std::size_t k = j + 1; k < beta.size(); ++k) {
      const Bits d = beta[j].basis ^ beta[k].basis;
      if (!d) continue;
      const int top = 63 - std::countl_zero(d);
      // j,k and k,j together: 2 Re(beta_j conj(beta_k)) (-1)^{p.d}
      by_top[static_cast<std::size_t>(top)].push_back({d, 2.0 * beta[j].amp * std::conj(beta[k].amp)});
    }
  }
  std::vector<Pair> active;
  Bits p = 0;
  for (int m = 0; m < n; ++m) {
    for (const auto& pr : by_top[static_cast<std::size_t>(m)]) active.push_back(pr);
    double s0 = diag, s1 = diag;
    for (const auto& pr : active) {
      const double re = pr.w.real();
      const int sign0 = parity(pr.diff & p);
      const int flip = bit(pr.diff, m);
      s0 += sign0 ? -re : re;
      s1 += (sign0 ^ flip) ? -re : re;
    }
    s0 = std::max(s0, 0.0);
    s1 = std::max(s1, 0.0);
    const double total = s0 + s1;
    const double u = uniform01(rng) * (total > 0 ? total : 1.0);
    if (u >= s0 && s1 > 0.0) p |= Bits{1} << m;
  }
  return p;
}

}  // namespace eqshadow
