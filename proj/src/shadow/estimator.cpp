#include "eqshadow/shadow/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqshadow {

namespace {

void require_req(const EqLabel& a) {
  if (a.scheme() != Scheme::Req) throw std::invalid_argument("closed-form estimator needs a req label");
}

double all_ones_sign(const EqLabel& a) {
  int par = a.num_edges();
  for (int i = 0; i < a.num_qubits(); ++i) par += a.diag(i);
  return (par & 1) ? -1.0 : 1.0;
}

}  // namespace

double equatorial_scale(Scheme scheme, int n) {
  return std::ldexp(1.0, scheme == Scheme::Eq ? n : n - 1);
}

double estimate_unchecked(Scheme scheme, const EqLabel& a, Bits p2, const Observable& o) {
  const double tr = o.trace();
  return equatorial_scale(scheme, a.num_qubits()) * o.equatorial_expectation(a) + o.basis_expectation(p2) -
         (scheme == Scheme::Eq ? tr : tr / 2);
}

double estimate_single(Scheme scheme, const EqLabel& a, Bits p2, const Observable& o) {
  if (a.num_qubits() != o.num_qubits()) throw std::invalid_argument("label and observable sizes differ");
  if (a.scheme() != scheme) throw std::invalid_argument("label scheme mismatch");
  if (scheme == Scheme::Req && !o.is_real()) throw std::invalid_argument("req scheme needs a real observable");
  return estimate_unchecked(scheme, a, p2, o);
}

double ghz_estimator(const EqLabel& a, Bits p2) {
  require_req(a);
  const int n = a.num_qubits();
  const double s = all_ones_sign(a);
  const double basis = (p2 == 0 || p2 == low_mask(n)) ? 0.5 : 0.0;
  return (1 + s) * (1 + s) / 4 + basis - 0.5;
}

double ghz_estimator_split(const EqLabel& a_before, Bits p, Bits p2) {
  require_req(a_before);
  const int n = a_before.num_qubits();
  int par = a_before.num_edges() + weight(p & low_mask(n));
  for (int i = 0; i < n; ++i) par += a_before.diag(i);
  const double s = (par & 1) ? -1.0 : 1.0;
  const double basis = (p2 == 0 || p2 == low_mask(n)) ? 0.5 : 0.0;
  return (1 + s) * (1 + s) / 4 + basis - 0.5;
}

double w_estimator(const EqLabel& a, Bits p2) {
  require_req(a);
  const int n = a.num_qubits();
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += a.diag(i) ? -1.0 : 1.0;
  const double basis = weight(p2 & low_mask(n)) == 1 ? 1.0 / n : 0.0;
  return sum * sum / (2.0 * n) + basis - 0.5;
}

double graph_estimator(const EqLabel& a, const QuadraticState& g) {
  require_req(a);
  const int n = a.num_qubits();
  return std::ldexp(std::norm(gauss_overlap(a, g)), n - 1) + std::ldexp(1.0, -n) - 0.5;
}

double variance_bound(Scheme scheme, const Observable& o) {
  return (scheme == Scheme::Eq ? 15.0 : 14.0) * o.traceless_norm_sq();
}

std::uint64_t copy_bound(double variance, double eps, double delta, std::uint64_t m) {
  if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1)) throw std::invalid_argument("eps and delta must lie in (0,1)");
  if (m < 1) throw std::invalid_argument("observable count must be positive");
  const double c = 136.0 * variance * std::log(2.0 * static_cast<double>(m) / delta) / (eps * eps);
  return static_cast<std::uint64_t>(std::ceil(c));
}

bool bitflip_tolerance(const std::vector<Bits>& components, Bits xi) {
  return std::all_of(components.begin(), components.end(), [&](Bits x) { return parity(x & xi) == 0; });
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty set");
  const auto k = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v[k];
}

}  // namespace eqshadow
