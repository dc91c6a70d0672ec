#include "eqshadow/shadow/observable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqshadow/qsim/dense.hpp"

namespace eqshadow {

Observable Observable::dense(Matrix o) {
  if (o.rows() != o.cols() || o.rows() < 2 || (o.rows() & (o.rows() - 1)))
    throw std::invalid_argument("observable must be square with power-of-two size");
  if ((o - o.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw std::invalid_argument("observable must be Hermitian");
  Observable ob;
  ob.kind_ = Kind::Dense;
  ob.n_ = std::countr_zero(static_cast<std::uint64_t>(o.rows()));
  ob.dense_ = std::move(o);
  return ob;
}

Observable Observable::pure(std::vector<cplx> psi) {
  const std::size_t d = psi.size();
  if (d < 2 || (d & (d - 1))) throw std::invalid_argument("target size must be a power of two");
  Observable ob;
  ob.kind_ = Kind::PureDense;
  ob.n_ = std::countr_zero(d);
  ob.psi_ = std::move(psi);
  return ob;
}

Observable Observable::pure_sparse(int n, std::vector<SparseTerm> terms) {
  require_qubits(n);
  std::sort(terms.begin(), terms.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.basis < b.basis; });
  Observable ob;
  ob.kind_ = Kind::PureSparse;
  ob.n_ = n;
  ob.sparse_ = std::move(terms);
  return ob;
}

Observable Observable::graph(QuadraticState g) {
  Observable ob;
  ob.kind_ = Kind::Graph;
  ob.n_ = g.n;
  ob.graph_ = std::move(g);
  return ob;
}

double Observable::trace() const { return kind_ == Kind::Dense ? dense_.trace().real() : 1.0; }

double Observable::traceless_norm_sq() const {
  const double d = std::ldexp(1.0, n_);
  if (kind_ != Kind::Dense) return 1.0 - 1.0 / d;
  const double tr = trace();
  return (dense_ * dense_).trace().real() - tr * tr / d;
}

bool Observable::is_real() const {
  switch (kind_) {
    case Kind::Dense: return dense_.imag().cwiseAbs().maxCoeff() < 1e-12;
    case Kind::PureDense: {
      // Real up to a global phase.
      cplx ref = 0.0;
      for (const auto& a : psi_)
        if (std::abs(a) > std::abs(ref)) ref = a;
      const cplx ph = std::abs(ref) > 0 ? std::conj(ref) / std::abs(ref) : 1.0;
      return std::all_of(psi_.begin(), psi_.end(), [&](const cplx& a) { return std::abs((a * ph).imag()) < 1e-12; });
    }
    case Kind::PureSparse: {
      const cplx ph = sparse_.empty() ? 1.0 : std::conj(sparse_[0].amp) / std::abs(sparse_[0].amp);
      return std::all_of(sparse_.begin(), sparse_.end(), [&](const SparseTerm& t) { return std::abs((t.amp * ph).imag()) < 1e-12; });
    }
    case Kind::Graph: return graph_.global_phase % 2 == 0;
  }
  return false;
}

double Observable::equatorial_expectation(const EqLabel& a) const {
  switch (kind_) {
    case Kind::Dense: {
      const auto phi = a.statevector();
      const Eigen::Map<const Vector> v(phi.data(), static_cast<Eigen::Index>(phi.size()));
      return (v.adjoint() * dense_ * v)(0, 0).real();
    }
    case Kind::PureDense: return std::norm(overlap_dense(a, psi_));
    case Kind::PureSparse: return std::norm(overlap_sparse(a, sparse_));
    case Kind::Graph: return std::norm(gauss_overlap(a, graph_));
  }
  return 0.0;
}

double Observable::basis_expectation(Bits p) const {
  switch (kind_) {
    case Kind::Dense: return dense_(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)).real();
    case Kind::PureDense: return std::norm(psi_[p]);
    case Kind::PureSparse: {
      auto it = std::lower_bound(sparse_.begin(), sparse_.end(), p,
                                 [](const SparseTerm& t, Bits v) { return t.basis < v; });
      return (it != sparse_.end() && it->basis == p) ? std::norm(it->amp) : 0.0;
    }
    case Kind::Graph: return std::ldexp(1.0, -n_);
  }
  return 0.0;
}

Matrix Observable::matrix() const {
  require_qubits(n_, dense_qubit_cap());
  const auto d = Eigen::Index{1} << n_;
  switch (kind_) {
    case Kind::Dense: return dense_;
    case Kind::PureDense: {
      const Eigen::Map<const Vector> v(psi_.data(), d);
      return v * v.adjoint();
    }
    case Kind::PureSparse: {
      Vector v = Vector::Zero(d);
      for (const auto& t : sparse_) v(static_cast<Eigen::Index>(t.basis)) = t.amp;
      return v * v.adjoint();
    }
    case Kind::Graph: {
      Vector v(d);
      for (Eigen::Index x = 0; x < d; ++x) v(x) = graph_.amplitude(static_cast<Bits>(x));
      return v * v.adjoint();
    }
  }
  return {};
}

double Observable::state_expectation(const std::vector<cplx>& v) const {
  if (v.size() != (std::size_t{1} << n_)) throw std::invalid_argument("vector size does not match observable");
  switch (kind_) {
    case Kind::Dense: {
      const Eigen::Map<const Vector> m(v.data(), static_cast<Eigen::Index>(v.size()));
      return (m.adjoint() * dense_ * m)(0, 0).real();
    }
    case Kind::PureDense: {
      cplx acc = 0;
      for (std::size_t x = 0; x < v.size(); ++x) acc += std::conj(psi_[x]) * v[x];
      return std::norm(acc);
    }
    case Kind::PureSparse: {
      cplx acc = 0;
      for (const auto& t : sparse_) acc += std::conj(t.amp) * v[t.basis];
      return std::norm(acc);
    }
    case Kind::Graph: {
      cplx acc = 0;
      for (std::size_t x = 0; x < v.size(); ++x) acc += std::conj(graph_.amplitude(x)) * v[x];
      return std::norm(acc);
    }
  }
  return 0.0;
}

double Observable::expectation(const Matrix& rho) const { return (rho * matrix()).trace().real(); }

}  // namespace eqshadow
