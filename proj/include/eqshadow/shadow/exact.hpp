#pragma once

#include <vector>

#include "eqshadow/shadow/observable.hpp"

namespace eqshadow {

// Exact outcome laws by enumeration over all labels (n <= 4).

// P(A) = (2^n/|S|) <phi_A|rho|phi_A>, indexed by EqLabel::index().
std::vector<double> label_law(Scheme scheme, const Matrix& rho);
// P(p') = <p'|rho|p'>.
std::vector<double> computational_law(const Matrix& rho);

struct EstimatorMoments {
  double mean = 0;
  double second = 0;
  double variance() const { return second - mean * mean; }
};

// Moments of the single-trial estimator over the joint law of (A, p').
EstimatorMoments exact_estimator_moments(Scheme scheme, const Matrix& rho, const Observable& o);

// E[(c <phi_A|O_0|phi_A>)^2] over the label law, c the equatorial scale:
// the equatorial part of the estimator for the traceless O_0.
double equatorial_second_moment(Scheme scheme, const Matrix& rho, const Matrix& o);

// Random test inputs. Normals come from uniform01 via Box-Muller, so draws
// are the same on every platform.
double normal01(Rng& rng);
std::vector<cplx> random_pure_state(int n, bool real, Rng& rng);
Matrix random_density(int n, Rng& rng);
Matrix random_hermitian(int n, bool real, Rng& rng);

}  // namespace eqshadow
