#pragma once

#include <vector>

#include "eqshadow/shadow/observable.hpp"

namespace eqshadow {

// eq:  2^n <phi_A|O|phi_A> + <p'|O|p'> - tr O
// req: 2^{n-1} <phi_A|O|phi_A> + <p'|O|p'> - tr O / 2
// A is the post-update label. Throws for req with a non-real O.
double estimate_single(Scheme scheme, const EqLabel& a, Bits p2, const Observable& o);
// Same, without the reality and size checks.
double estimate_unchecked(Scheme scheme, const EqLabel& a, Bits p2, const Observable& o);

// Scale of the equatorial term: 2^n or 2^{n-1}.
double equatorial_scale(Scheme scheme, int n);

// GHZ fidelity estimator from a post-update req label.
double ghz_estimator(const EqLabel& a, Bits p2);
// Same from the pre-update label and the circuit outcome p.
double ghz_estimator_split(const EqLabel& a_before, Bits p, Bits p2);
double w_estimator(const EqLabel& a, Bits p2);
// Graph-state fidelity; the computational half contributes 2^{-n}.
double graph_estimator(const EqLabel& a, const QuadraticState& g);

// Per-trial variance bound: 15 tr(O_0^2) (eq) or 14 tr(O_0^2) (req).
double variance_bound(Scheme scheme, const Observable& o);
// ceil(136 * var * log(2M/delta) / eps^2)
std::uint64_t copy_bound(double variance, double eps, double delta, std::uint64_t m);

// True iff every component string has even overlap with xi.
bool bitflip_tolerance(const std::vector<Bits>& components, Bits xi);

// Lower median for an even count.
double median(std::vector<double> v);

}  // namespace eqshadow
