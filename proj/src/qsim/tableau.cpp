#include "eqshadow/qsim/tableau.hpp"

#include <cmath>
#include <stdexcept>

#include "eqshadow/qsim/dense.hpp"

namespace eqshadow {

Tableau::Tableau(int n) : n_(n) {
  require_qubits(n);
  const auto rows = static_cast<std::size_t>(2 * n + 1);
  x_.assign(rows, 0);
  z_.assign(rows, 0);
  r_.assign(rows, 0);
  for (int i = 0; i < n; ++i) {
    x_[static_cast<std::size_t>(i)] = Bits{1} << i;
    z_[static_cast<std::size_t>(n + i)] = Bits{1} << i;
  }
}

void Tableau::set_row(int i, const PauliString& p) {
  x_[static_cast<std::size_t>(i)] = p.x;
  z_[static_cast<std::size_t>(i)] = p.z;
  r_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p.sign & 1);
}

void Tableau::apply(const Gate& g) {
  const int a = g.q0;
  const int rows = 2 * n_;
  for (int i = 0; i < rows; ++i) {
    auto& x = x_[static_cast<std::size_t>(i)];
    auto& z = z_[static_cast<std::size_t>(i)];
    auto& r = r_[static_cast<std::size_t>(i)];
    const int xa = bit(x, a), za = bit(z, a);
    switch (g.kind) {
      case GateKind::H:
        r ^= static_cast<std::uint8_t>(xa & za);
        if (xa != za) {
          x ^= Bits{1} << a;
          z ^= Bits{1} << a;
        }
        break;
      case GateKind::S:
        r ^= static_cast<std::uint8_t>(xa & za);
        if (xa) z ^= Bits{1} << a;
        break;
      case GateKind::Sdg:
        r ^= static_cast<std::uint8_t>(xa & (za ^ 1));
        if (xa) z ^= Bits{1} << a;
        break;
      case GateKind::X: r ^= static_cast<std::uint8_t>(za); break;
      case GateKind::Z: r ^= static_cast<std::uint8_t>(xa); break;
      case GateKind::Y: r ^= static_cast<std::uint8_t>(xa ^ za); break;
      case GateKind::CNOT: {
        const int b = g.q1;
        const int xb = bit(x, b), zb = bit(z, b);
        r ^= static_cast<std::uint8_t>(xa & zb & (xb ^ za ^ 1));
        if (xa) x ^= Bits{1} << b;
        if (zb) z ^= Bits{1} << a;
        break;
      }
      case GateKind::CZ: {
        // CZ = H_b CNOT H_b; X_a -> X_a Z_b, X_b -> Z_a X_b.
        const int b = g.q1;
        const int xb = bit(x, b), zb = bit(z, b);
        r ^= static_cast<std::uint8_t>(xa & xb & (za ^ zb));
        if (xb) z ^= Bits{1} << a;
        if (xa) z ^= Bits{1} << b;
        break;
      }
    }
  }
}

void Tableau::apply(const Circuit& c) {
  if (c.num_qubits() != n_) throw std::invalid_argument("circuit size mismatch");
  for (const auto& layer : c.layers())
    for (const auto& g : layer) apply(g);
}

void Tableau::apply_pauli(Bits x, Bits z) {
  for (int i = 0; i < 2 * n_; ++i)
    r_[static_cast<std::size_t>(i)] ^= static_cast<std::uint8_t>(
        parity(x_[static_cast<std::size_t>(i)] & z) ^ parity(z_[static_cast<std::size_t>(i)] & x));
}

void Tableau::rowsum(int h, int i) {
  const Bits x1 = x_[static_cast<std::size_t>(i)], z1 = z_[static_cast<std::size_t>(i)];
  const Bits x2 = x_[static_cast<std::size_t>(h)], z2 = z_[static_cast<std::size_t>(h)];
  // Exponent of i picked up when multiplying the single-qubit factors.
  const Bits y1 = x1 & z1, xo = x1 & ~z1, zo = ~x1 & z1;
  const Bits plus = (y1 & z2 & ~x2) | (xo & x2 & z2) | (zo & x2 & ~z2);
  const Bits minus = (y1 & x2 & ~z2) | (xo & ~x2 & z2) | (zo & x2 & z2);
  const int total = 2 * r_[static_cast<std::size_t>(h)] + 2 * r_[static_cast<std::size_t>(i)] +
                    weight(plus) - weight(minus);
  r_[static_cast<std::size_t>(h)] = static_cast<std::uint8_t>(((total % 4) + 4) % 4 == 2);
  x_[static_cast<std::size_t>(h)] = x1 ^ x2;
  z_[static_cast<std::size_t>(h)] = z1 ^ z2;
}

bool Tableau::anticommutes(int i, const PauliString& p) const {
  return parity(x_[static_cast<std::size_t>(i)] & p.z) ^ parity(z_[static_cast<std::size_t>(i)] & p.x);
}

std::pair<int, bool> Tableau::measure(const PauliString& p, Rng* rng, std::optional<int> forced) {
  int pivot = -1;
  for (int i = n_; i < 2 * n_; ++i)
    if (anticommutes(i, p)) {
      pivot = i;
      break;
    }
  if (pivot >= 0) {
    for (int i = 0; i < 2 * n_; ++i)
      if (i != pivot && anticommutes(i, p)) rowsum(i, pivot);
    set_row(pivot - n_, row(pivot));
    int outcome;
    if (forced) outcome = *forced & 1;
    else if (rng) outcome = static_cast<int>((*rng)() & 1u);
    else throw std::invalid_argument("random outcome needs an rng");
    set_row(pivot, PauliString{p.x, p.z, outcome ^ p.sign});
    return {outcome, true};
  }
  const int scratch = 2 * n_;
  set_row(scratch, PauliString{});
  for (int i = 0; i < n_; ++i)
    if (anticommutes(i, p)) rowsum(scratch, i + n_);
  return {(r_[static_cast<std::size_t>(scratch)] ^ p.sign) & 1, false};
}

Bits Tableau::measure_all(Rng& rng) {
  Bits out = 0;
  for (int q = 0; q < n_; ++q)
    if (measure_z(q, rng)) out |= Bits{1} << q;
  return out;
}

AffineSupport Tableau::z_support() const {
  Tableau t = *this;
  AffineSupport s;
  for (int q = 0; q < n_; ++q)
    if (t.measure(PauliString{0, Bits{1} << q, 0}, nullptr, 0).first) s.offset |= Bits{1} << q;
  // Row-reduce the X parts of the stabilizers.
  std::vector<Bits> rows;
  for (int i = 0; i < n_; ++i) rows.push_back(x_[static_cast<std::size_t>(n_ + i)]);
  for (Bits v : rows) {
    for (Bits b : s.basis) v = std::min(v, v ^ b);
    if (v) s.basis.push_back(v);
  }
  return s;
}

double Tableau::overlap_sq(const Tableau& other) const {
  if (other.n_ != n_) throw std::invalid_argument("overlap size mismatch");
  Tableau t = *this;
  double p = 1.0;
  for (int i = 0; i < n_; ++i) {
    const auto [outcome, random] = t.measure(other.stabilizer(i), nullptr, 0);
    if (random) p *= 0.5;
    else if (outcome) return 0.0;
  }
  return p;
}

std::vector<cplx> Tableau::to_statevector() const {
  require_qubits(n_, dense_qubit_cap());
  const std::size_t d = std::size_t{1} << n_;
  std::vector<cplx> v(d, 0.0);
  v[z_support().offset] = 1.0;
  for (int i = 0; i < n_; ++i) {
    const PauliString s = stabilizer(i);
    const cplx ph = ipow(weight(s.x & s.z) + 2 * s.sign);
    std::vector<cplx> w(d);
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t src = y ^ s.x;
      w[y] = ph * (parity(s.z & src) ? -1.0 : 1.0) * v[src];
    }
    for (std::size_t y = 0; y < d; ++y) v[y] = 0.5 * (v[y] + w[y]);
  }
  double nrm = 0.0;
  for (const auto& a : v) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  for (auto& a : v) a /= nrm;
  return v;
}

std::string Tableau::key() const {
  std::string k;
  for (int i = 0; i < 2 * n_; ++i) {
    k += std::to_string(x_[static_cast<std::size_t>(i)]) + "," + std::to_string(z_[static_cast<std::size_t>(i)]) +
         "," + std::to_string(r_[static_cast<std::size_t>(i)]) + ";";
  }
  return k;
}

Tableau tableau_of(const EqLabel& a) {
  const int n = a.num_qubits();
  Tableau t(n);
  for (int q = 0; q < n; ++q) t.apply(Gate{GateKind::H, q});
  for (auto [i, j] : a.edges()) t.apply(Gate{GateKind::CZ, i, j});
  for (int q = 0; q < n; ++q) {
    const int d = a.phase_diag_coefficient(q) % 4;
    if (d == 1) t.apply(Gate{GateKind::S, q});
    if (d == 2) t.apply(Gate{GateKind::Z, q});
    if (d == 3) t.apply(Gate{GateKind::Sdg, q});
  }
  return t;
}

}  // namespace eqshadow
