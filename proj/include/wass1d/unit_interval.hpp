#pragma once

#include <utility>
#include <vector>

#include "wass1d/measure.hpp"

namespace wass1d {

class Rng;

// d_W1(delta_0, mu) for a measure on [0,1]; mu lies in the slice of this value.
double slice_of(const Measure& mu);

// ((1-t) delta_0 + t delta_1, delta_t): the farthest pair in the slice t.
std::pair<Measure, Measure> slice_extremal_pair(double t);

// Random measure on [0,1] with slice value t: a random discrete measure whose
// positions are pushed towards 0 or 1 by an affine map fixing that end.
Measure random_slice_member(Rng& rng, double t);

// The 2^n two-point measures with delta_0-weights (2k-1)/2^{n+1}.
std::vector<Measure> qn_elements(int n);

// Equal-weight measure on 2^n sorted positions in [0,1].
Measure mn_element(const std::vector<double>& positions);

struct NearestResult {
  Measure nearest;
  double distance;
};

// Closest equal-weight 2^n-point measure in d_Wp, p > 1.
NearestResult nearest_in_Mn(const Measure& mu, int n, double p);

// Minimizer of a -> int over the levels [lo, hi) of |Q_mu - a|^p, by
// bisection on the sign of the derivative.
double block_minimizer(const Measure& mu, double lo, double hi, double p);

// Nearest Dirac mass to (1 - alpha) delta_0 + alpha delta_1 in d_Wp.
double t_star(double alpha, double p);

// Quantile sum_j w_j Q_j. Zero weights are dropped; negative ones rejected.
Measure convex_hull_combination(const std::vector<std::pair<Measure, double>>& items);

// Coefficients expressing mn_element(positions) as a combination of delta_1,
// delta_0 and the two-point measures ((j/N) delta_0 + (1 - j/N) delta_1).
std::vector<std::pair<Measure, double>> ladder_decomposition(const std::vector<double>& positions);

}  // namespace wass1d
