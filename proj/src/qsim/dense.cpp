#include "eqshadow/qsim/dense.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace eqshadow {

int dense_qubit_cap() {
  if (const char* env = std::getenv("EQSHADOW_DENSE_CAP")) {
    const int v = std::atoi(env);
    if (v > 0 && v <= 30) return v;
  }
  return 12;
}

DenseState::DenseState(int n) : n_(n) {
  require_qubits(n, dense_qubit_cap());
  amp_.assign(std::size_t{1} << n, 0.0);
  amp_[0] = 1.0;
}

DenseState DenseState::from_amplitudes(std::vector<cplx> amps) {
  const std::size_t d = amps.size();
  if (d < 2 || (d & (d - 1))) throw std::invalid_argument("amplitude count must be a power of two");
  DenseState s;
  s.n_ = std::countr_zero(d);
  require_qubits(s.n_, dense_qubit_cap());
  s.amp_ = std::move(amps);
  return s;
}

void DenseState::apply(const Gate& g) {
  const std::size_t d = amp_.size();
  const std::size_t m0 = std::size_t{1} << g.q0;
  static const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      for (std::size_t x = 0; x < d; ++x)
        if (!(x & m0)) {
          const cplx a = amp_[x], b = amp_[x | m0];
          amp_[x] = (a + b) * r;
          amp_[x | m0] = (a - b) * r;
        }
      break;
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Z: {
      const cplx ph = g.kind == GateKind::S ? cplx(0, 1) : g.kind == GateKind::Sdg ? cplx(0, -1) : cplx(-1, 0);
      for (std::size_t x = 0; x < d; ++x)
        if (x & m0) amp_[x] *= ph;
      break;
    }
    case GateKind::X:
    case GateKind::Y:
      for (std::size_t x = 0; x < d; ++x)
        if (!(x & m0)) {
          std::swap(amp_[x], amp_[x | m0]);
          if (g.kind == GateKind::Y) {
            // Y = [[0,-i],[i,0]]
            amp_[x] *= cplx(0, -1);
            amp_[x | m0] *= cplx(0, 1);
          }
        }
      break;
    case GateKind::CZ: {
      const std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t x = 0; x < d; ++x)
        if ((x & m0) && (x & m1)) amp_[x] = -amp_[x];
      break;
    }
    case GateKind::CNOT: {
      const std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t x = 0; x < d; ++x)
        if ((x & m0) && !(x & m1)) std::swap(amp_[x], amp_[x | m1]);
      break;
    }
  }
}

void DenseState::apply(const Circuit& c) {
  if (c.num_qubits() != n_) throw std::invalid_argument("circuit size mismatch");
  for (const auto& layer : c.layers())
    for (const auto& g : layer) apply(g);
}

void DenseState::apply_pauli(Bits x, Bits z) {
  for (int q = 0; q < n_; ++q) {
    if (bit(z, q)) apply(Gate{GateKind::Z, q});
    if (bit(x, q)) apply(Gate{GateKind::X, q});
  }
}

void DenseState::rotate_to_measurement(const Circuit& c) {
  for (int q = 0; q < n_; ++q) {
    const Basis b = c.measurement(q);
    if (b == Basis::Y) apply(Gate{GateKind::Sdg, q});
    if (b == Basis::X || b == Basis::Y) apply(Gate{GateKind::H, q});
  }
}

double DenseState::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> probabilities_of(const std::vector<cplx>& v) {
  std::vector<double> p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::norm(v[i]);
  return p;
}

std::vector<double> DenseState::probabilities() const { return probabilities_of(amp_); }

Bits sample_index(const std::vector<double>& probs, Rng& rng) {
  double total = 0.0;
  for (double p : probs) total += p;
  double u = uniform01(rng) * total;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    u -= probs[i];
    if (u < 0.0) return i;
  }
  // Rounding fallthrough: last index with positive weight.
  for (std::size_t i = probs.size(); i-- > 0;)
    if (probs[i] > 0.0) return i;
  return 0;
}

Bits DenseState::sample(Rng& rng) const { return sample_index(probabilities(), rng); }

Bits sample_circuit(const Circuit& c, DenseState psi, Rng& rng) {
  psi.apply(c);
  psi.rotate_to_measurement(c);
  return c.postprocess(psi.sample(rng));
}

std::vector<double> outcome_distribution(const Circuit& c, DenseState psi) {
  psi.apply(c);
  psi.rotate_to_measurement(c);
  const auto raw = psi.probabilities();
  std::vector<double> out(raw.size(), 0.0);
  for (std::size_t x = 0; x < raw.size(); ++x) out[c.postprocess(x)] += raw[x];
  return out;
}

void walsh_hadamard(std::vector<cplx>& v) {
  const std::size_t d = v.size();
  for (std::size_t h = 1; h < d; h <<= 1)
    for (std::size_t i = 0; i < d; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const cplx a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

}  // namespace eqshadow
