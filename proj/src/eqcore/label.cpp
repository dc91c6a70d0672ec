#include "eqshadow/eqcore/label.hpp"

#include <cmath>
#include <stdexcept>

namespace eqshadow {

std::string scheme_name(Scheme s) { return s == Scheme::Eq ? "eq" : "req"; }

Scheme parse_scheme(std::string_view s) {
  if (s == "eq" || s == "espovm") return Scheme::Eq;
  if (s == "req" || s == "respovm") return Scheme::Req;
  throw std::invalid_argument("unknown scheme: " + std::string(s));
}

cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

EqLabel::EqLabel(Scheme scheme, int n)
    : scheme_(scheme), n_(n), diag_(static_cast<std::size_t>(n), 0),
      adj_(static_cast<std::size_t>(n), 0) {
  require_qubits(n);
}

void EqLabel::set_diag(int i, int value) {
  const int m = modulus();
  diag_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(((value % m) + m) % m);
}

void EqLabel::set_edge(int i, int j, bool on) {
  if (i == j) throw std::invalid_argument("label edge on the diagonal");
  const Bits bi = Bits{1} << i, bj = Bits{1} << j;
  auto& ri = adj_[static_cast<std::size_t>(i)];
  auto& rj = adj_[static_cast<std::size_t>(j)];
  if (on) {
    ri |= bj;
    rj |= bi;
  } else {
    ri &= ~bj;
    rj &= ~bi;
  }
}

std::vector<std::pair<int, int>> EqLabel::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

int EqLabel::num_edges() const {
  int c = 0;
  for (Bits r : adj_) c += weight(r);
  return c / 2;
}

EqLabel EqLabel::random(Scheme scheme, int n, Rng& rng) {
  EqLabel a(scheme, n);
  const int dbits = scheme == Scheme::Eq ? 2 : 1;
  for (int i = 0; i < n; ++i) a.set_diag(i, static_cast<int>(random_word(rng, dbits)));
  for (int i = 0; i < n; ++i) {
    const int rest = n - 1 - i;
    if (rest == 0) continue;
    const Bits w = random_word(rng, rest);
    for (int k = 0; k < rest; ++k)
      if ((w >> k) & 1u) a.set_edge(i, i + 1 + k, true);
  }
  return a;
}

EqLabel EqLabel::from_index(Scheme scheme, int n, std::uint64_t index) {
  if (label_count_log2(scheme, n) > 63) throw std::overflow_error("label index space too large");
  EqLabel a(scheme, n);
  const int m = a.modulus();
  for (int i = 0; i < n; ++i) {
    a.set_diag(i, static_cast<int>(index % static_cast<std::uint64_t>(m)));
    index /= static_cast<std::uint64_t>(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (index & 1u) a.set_edge(i, j, true);
      index >>= 1;
    }
  return a;
}

std::uint64_t EqLabel::index() const {
  std::uint64_t idx = 0, scale = 1;
  const auto m = static_cast<std::uint64_t>(modulus());
  for (int i = 0; i < n_; ++i) {
    idx += scale * static_cast<std::uint64_t>(diag(i));
    scale *= m;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (edge(i, j)) idx += scale;
      scale <<= 1;
    }
  return idx;
}

EqLabel EqLabel::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("label needs 4 ':'-separated fields");
  const Scheme scheme = parse_scheme(parts[0]);
  const int n = std::stoi(std::string(parts[1]));
  EqLabel a(scheme, n);
  if (static_cast<int>(parts[2].size()) != n)
    throw std::invalid_argument("label diagonal has wrong length");
  for (int i = 0; i < n; ++i) {
    const int d = parts[2][static_cast<std::size_t>(i)] - '0';
    if (d < 0 || d >= a.modulus()) throw std::invalid_argument("label diagonal digit out of range");
    a.set_diag(i, d);
  }
  if (parts[3].size() != static_cast<std::size_t>(n * (n - 1) / 2))
    throw std::invalid_argument("label off-diagonal has wrong length");
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const char c = parts[3][k++];
      if (c != '0' && c != '1') throw std::invalid_argument("label off-diagonal must be bits");
      a.set_edge(i, j, c == '1');
    }
  return a;
}

std::string EqLabel::to_string() const {
  std::string s = scheme_name(scheme_) + ":" + std::to_string(n_) + ":";
  for (int i = 0; i < n_; ++i) s += static_cast<char>('0' + diag(i));
  s += ':';
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s += edge(i, j) ? '1' : '0';
  return s;
}

int EqLabel::phase(Bits x) const {
  int lin = 0, cross = 0;
  for (Bits rest = x; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    lin += diag_[static_cast<std::size_t>(i)];
    cross += weight(adj_[static_cast<std::size_t>(i)] & x);
  }
  // cross counts each edge twice.
  const int pairs = (cross / 2) & 1;
  if (scheme_ == Scheme::Eq) return (lin + 2 * pairs) & 3;
  return 2 * ((lin + pairs) & 1);
}

cplx EqLabel::amplitude(Bits x) const {
  return ipow(phase(x)) * std::pow(2.0, -0.5 * n_);
}

std::vector<cplx> EqLabel::statevector() const {
  require_qubits(n_, 30);
  const std::size_t dim = std::size_t{1} << n_;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> v(dim);
  for (std::size_t x = 0; x < dim; ++x) v[x] = ipow(phase(x)) * norm;
  return v;
}

EqLabel EqLabel::with_outcome(Bits p) const {
  EqLabel a = *this;
  const int shift = scheme_ == Scheme::Eq ? 2 : 1;
  for (int i = 0; i < n_; ++i)
    if (bit(p, i)) a.set_diag(i, diag(i) + shift);
  return a;
}

int label_count_log2(Scheme scheme, int n) {
  return scheme == Scheme::Eq ? (n * n + 3 * n) / 2 : (n * n + n) / 2;
}

std::uint64_t label_count(Scheme scheme, int n) {
  const int e = label_count_log2(scheme, n);
  if (e >= 64) throw std::overflow_error("label count exceeds 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace eqshadow
