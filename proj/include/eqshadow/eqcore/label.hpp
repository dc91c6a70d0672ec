#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqshadow/eqcore/bits.hpp"
#include "eqshadow/eqcore/rng.hpp"

namespace eqshadow {

using cplx = std::complex<double>;

// Eq: diagonal in Z4. Req: diagonal in Z2 (phases restricted to +-1).
enum class Scheme { Eq, Req };

std::string scheme_name(Scheme s);
Scheme parse_scheme(std::string_view s);

// i^k for k taken mod 4.
cplx ipow(int k);

// Symmetric label matrix A of an equatorial state
//   |phi_A> = 2^{-n/2} sum_x i^{q_A(x)} |x>.
class EqLabel {
 public:
  EqLabel() = default;
  EqLabel(Scheme scheme, int n);

  static EqLabel random(Scheme scheme, int n, Rng& rng);
  // Enumeration order: diagonal digits (qubit 0 least significant), then
  // upper-triangular bits in row-major order.
  static EqLabel from_index(Scheme scheme, int n, std::uint64_t index);
  std::uint64_t index() const;

  // "eq:n:<diag digits>:<upper bits>", e.g. "eq:3:012:101".
  static EqLabel parse(std::string_view text);
  std::string to_string() const;

  Scheme scheme() const { return scheme_; }
  int num_qubits() const { return n_; }
  int modulus() const { return scheme_ == Scheme::Eq ? 4 : 2; }

  int diag(int i) const { return diag_[static_cast<std::size_t>(i)]; }
  void set_diag(int i, int value);
  bool edge(int i, int j) const { return (adj_[static_cast<std::size_t>(i)] >> j) & 1u; }
  void set_edge(int i, int j, bool on);
  Bits neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  std::vector<std::pair<int, int>> edges() const;
  int num_edges() const;

  // Exponent of i in the amplitude, in Z4.
  int phase(Bits x) const;
  cplx amplitude(Bits x) const;
  std::vector<cplx> statevector() const;

  // Label after the measurement update with outcome p.
  EqLabel with_outcome(Bits p) const;

  // Diagonal contribution to the Z4 phase, d_i x_i.
  int phase_diag_coefficient(int i) const {
    return scheme_ == Scheme::Eq ? diag(i) : 2 * diag(i);
  }

  bool operator==(const EqLabel& o) const {
    return scheme_ == o.scheme_ && n_ == o.n_ && diag_ == o.diag_ && adj_ == o.adj_;
  }

 private:
  Scheme scheme_ = Scheme::Eq;
  int n_ = 0;
  std::vector<std::uint8_t> diag_;
  std::vector<Bits> adj_;  // symmetric adjacency, zero diagonal
};

// log2 of the number of labels: (n^2+3n)/2 or (n^2+n)/2.
int label_count_log2(Scheme scheme, int n);
// Throws std::overflow_error when the count does not fit in 64 bits.
std::uint64_t label_count(Scheme scheme, int n);

}  // namespace eqshadow
