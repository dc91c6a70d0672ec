#include "eqshadow/eqcore/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace eqshadow {

namespace {

void check_args(int n, int t) {
  require_qubits(n, 4);
  if (t < 1 || t > 3) throw std::invalid_argument("moment order must be 1, 2 or 3");
  if (n * t > 10) throw std::invalid_argument("moment matrix too large");
}

// The 15 perfect matchings of six positions.
constexpr int kMatchings[15][3][2] = {
    {{0, 1}, {2, 3}, {4, 5}}, {{0, 1}, {2, 4}, {3, 5}}, {{0, 1}, {2, 5}, {3, 4}},
    {{0, 2}, {1, 3}, {4, 5}}, {{0, 2}, {1, 4}, {3, 5}}, {{0, 2}, {1, 5}, {3, 4}},
    {{0, 3}, {1, 2}, {4, 5}}, {{0, 3}, {1, 4}, {2, 5}}, {{0, 3}, {1, 5}, {2, 4}},
    {{0, 4}, {1, 2}, {3, 5}}, {{0, 4}, {1, 3}, {2, 5}}, {{0, 4}, {1, 5}, {2, 3}},
    {{0, 5}, {1, 2}, {3, 4}}, {{0, 5}, {1, 3}, {2, 4}}, {{0, 5}, {1, 4}, {2, 3}},
};

}  // namespace

bool k_set_contains(KSet k, const SixTuple& v) {
  for (const auto& m : kMatchings) {
    bool equal = true;
    int crossing = 0;
    for (const auto& pr : m) {
      if (v[static_cast<std::size_t>(pr[0])] != v[static_cast<std::size_t>(pr[1])]) equal = false;
      if ((pr[0] < 3) != (pr[1] < 3)) ++crossing;
    }
    if (!equal) continue;
    if (k == KSet::K1 || crossing == 3) return true;
    // One crossing pair: the ket-internal pair must equal the bra-internal pair.
    Bits ket = 0, bra = 0;
    for (const auto& pr : m) {
      if (pr[0] < 3 && pr[1] < 3) ket = v[static_cast<std::size_t>(pr[0])];
      if (pr[0] >= 3 && pr[1] >= 3) bra = v[static_cast<std::size_t>(pr[0])];
    }
    if (ket == bra) return true;
  }
  return false;
}

Matrix moment_exact(Scheme scheme, int n, int t) {
  check_args(n, t);
  const std::uint64_t count = label_count(scheme, n);
  const Eigen::Index d = Eigen::Index{1} << n;
  const Eigen::Index dim = Eigen::Index{1} << (n * t);
  Matrix acc = Matrix::Zero(dim, dim);
  Vector v(dim);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const EqLabel a = EqLabel::from_index(scheme, n, idx);
    const auto phi = a.statevector();
    for (Eigen::Index i = 0; i < dim; ++i) {
      cplx amp = 1.0;
      Eigen::Index rest = i;
      for (int f = 0; f < t; ++f) {
        amp *= phi[static_cast<std::size_t>(rest % d)];
        rest /= d;
      }
      v(i) = amp;
    }
    acc.noalias() += v * v.adjoint();
  }
  return acc / static_cast<double>(count);
}

Matrix moment_closed_form(Scheme scheme, int n, int t) {
  check_args(n, t);
  const Eigen::Index d = Eigen::Index{1} << n;
  const Eigen::Index dim = Eigen::Index{1} << (n * t);
  if (t == 1) return Matrix::Identity(d, d) / static_cast<double>(d);
  Matrix m = Matrix::Zero(dim, dim);
  if (t == 2) {
    for (Eigen::Index x = 0; x < d; ++x)
      for (Eigen::Index y = 0; y < d; ++y) {
        m(x * d + y, x * d + y) += 1.0;
        m(x * d + y, y * d + x) += 1.0;
      }
    for (Eigen::Index x = 0; x < d; ++x) {
      if (scheme == Scheme::Eq) {
        m(x * d + x, x * d + x) -= 1.0;
      } else {
        for (Eigen::Index y = 0; y < d; ++y) m(x * d + x, y * d + y) += 1.0;
        m(x * d + x, x * d + x) -= 2.0;
      }
    }
    return m / static_cast<double>(d * d);
  }
  const KSet k = scheme == Scheme::Eq ? KSet::K2 : KSet::K1;
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      const SixTuple v = {static_cast<Bits>(r / (d * d)), static_cast<Bits>((r / d) % d),
                          static_cast<Bits>(r % d),       static_cast<Bits>(c / (d * d)),
                          static_cast<Bits>((c / d) % d), static_cast<Bits>(c % d)};
      if (k_set_contains(k, v)) m(r, c) = 1.0;
    }
  return m / static_cast<double>(d * d * d);
}

Matrix third_moment_combination(Scheme scheme, int n) {
  check_args(n, 3);
  const Eigen::Index d = Eigen::Index{1} << n;
  const Eigen::Index dim = d * d * d;
  auto idx = [d](Eigen::Index a, Eigen::Index b, Eigen::Index c) { return (a * d + b) * d + c; };
  Matrix c1 = Matrix::Zero(dim, dim), c2 = c1, c3 = c1, c4 = c1, c5 = c1;
  for (Eigen::Index x = 0; x < d; ++x) {
    c1(idx(x, x, x), idx(x, x, x)) += 1.0;
    for (Eigen::Index y = 0; y < d; ++y) {
      const Eigen::Index odd[3] = {idx(y, x, x), idx(x, y, x), idx(x, x, y)};
      for (auto a : odd) {
        for (auto b : odd) c2(a, b) += 1.0;
        c3(a, idx(y, y, y)) += 1.0;
        c3(idx(y, y, y), a) += 1.0;
      }
      for (Eigen::Index z = 0; z < d; ++z) {
        const Eigen::Index v[3] = {x, y, z};
        constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) c4(idx(x, y, z), idx(v[p[0]], v[p[1]], v[p[2]])) += 1.0;
        const Eigen::Index ket[3] = {idx(x, x, z), idx(x, z, x), idx(z, x, x)};
        const Eigen::Index bra[3] = {idx(y, y, z), idx(y, z, y), idx(z, y, y)};
        for (auto a : ket)
          for (auto b : bra) c5(a, b) += 1.0;
      }
    }
  }
  Matrix m = scheme == Scheme::Eq ? Matrix(4.0 * c1 - c2 + c4)
                                  : Matrix(16.0 * c1 - 2.0 * c2 - 2.0 * c3 + c4 + c5);
  return m / static_cast<double>(dim);
}

}  // namespace eqshadow
