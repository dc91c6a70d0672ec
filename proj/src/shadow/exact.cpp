#include "eqshadow/shadow/exact.hpp"

#include "eqshadow/shadow/estimator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqshadow {

namespace {

int size_of(const Matrix& m) {
  const auto d = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || d < 2 || (d & (d - 1))) throw std::invalid_argument("matrix must be square with power-of-two size");
  const int n = std::countr_zero(d);
  require_qubits(n, 4);
  return n;
}

Vector label_vector(const EqLabel& a) {
  const auto sv = a.statevector();
  return Eigen::Map<const Vector>(sv.data(), static_cast<Eigen::Index>(sv.size()));
}

double quad(const Vector& v, const Matrix& m) { return (v.adjoint() * m * v)(0, 0).real(); }

}  // namespace

std::vector<double> label_law(Scheme scheme, const Matrix& rho) {
  const int n = size_of(rho);
  const std::uint64_t count = label_count(scheme, n);
  const double w = std::ldexp(1.0, n) / static_cast<double>(count);
  std::vector<double> law(count);
  for (std::uint64_t k = 0; k < count; ++k) law[k] = w * quad(label_vector(EqLabel::from_index(scheme, n, k)), rho);
  return law;
}

std::vector<double> computational_law(const Matrix& rho) {
  size_of(rho);
  std::vector<double> law(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index p = 0; p < rho.rows(); ++p) law[static_cast<std::size_t>(p)] = rho(p, p).real();
  return law;
}

EstimatorMoments exact_estimator_moments(Scheme scheme, const Matrix& rho, const Observable& o) {
  const int n = size_of(rho);
  if (o.num_qubits() != n) throw std::invalid_argument("state and observable sizes differ");
  const Matrix om = o.matrix();
  const double c = equatorial_scale(scheme, n);
  const double tr = om.trace().real();
  const std::uint64_t count = label_count(scheme, n);
  const double w = std::ldexp(1.0, n) / static_cast<double>(count);
  // X = c <phi|O|phi> and Y = <p'|O|p'> - tr O (/2) are independent.
  double ex = 0, ex2 = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const Vector v = label_vector(EqLabel::from_index(scheme, n, k));
    const double pr = w * quad(v, rho);
    const double x = c * quad(v, om);
    ex += pr * x;
    ex2 += pr * x * x;
  }
  const double shift = scheme == Scheme::Eq ? tr : tr / 2;
  double ey = 0, ey2 = 0;
  for (Eigen::Index p = 0; p < rho.rows(); ++p) {
    const double pr = rho(p, p).real();
    const double y = om(p, p).real() - shift;
    ey += pr * y;
    ey2 += pr * y * y;
  }
  return {ex + ey, ex2 + 2 * ex * ey + ey2};
}

double equatorial_second_moment(Scheme scheme, const Matrix& rho, const Matrix& o) {
  const int n = size_of(rho);
  const auto d = rho.rows();
  const Matrix o0 = o - Matrix::Identity(d, d) * (o.trace() / static_cast<double>(d));
  const double c = equatorial_scale(scheme, n);
  const std::uint64_t count = label_count(scheme, n);
  const double w = std::ldexp(1.0, n) / static_cast<double>(count);
  double acc = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const Vector v = label_vector(EqLabel::from_index(scheme, n, k));
    const double x = c * quad(v, o0);
    acc += w * quad(v, rho) * x * x;
  }
  return acc;
}

double normal01(Rng& rng) {
  double u = uniform01(rng);
  while (u <= 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2 * std::numbers::pi * v);
}

std::vector<cplx> random_pure_state(int n, bool real, Rng& rng) {
  std::vector<cplx> psi(std::size_t{1} << n);
  double norm = 0;
  for (auto& a : psi) {
    const double re = normal01(rng);
    a = real ? cplx(re, 0.0) : cplx(re, normal01(rng));
    norm += std::norm(a);
  }
  for (auto& a : psi) a /= std::sqrt(norm);
  return psi;
}

Matrix random_density(int n, Rng& rng) {
  const auto d = Eigen::Index{1} << n;
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(normal01(rng), normal01(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix random_hermitian(int n, bool real, Rng& rng) {
  const auto d = Eigen::Index{1} << n;
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = real ? cplx(normal01(rng), 0.0) : cplx(normal01(rng), normal01(rng));
  return (g + g.adjoint()) / 2.0;
}

}  // namespace eqshadow
