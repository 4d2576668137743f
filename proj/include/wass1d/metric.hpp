#pragma once

#include <optional>

#include "wass1d/measure.hpp"

namespace wass1d {

// W_p distance: the L^p distance of the quantile functions.
double wasserstein_distance(const Measure& mu, const Measure& nu, double p);

// W_1 distance computed from the distribution functions, int |F_mu - F_nu|.
double wasserstein1_cdf(const Measure& mu, const Measure& nu);

// Cost of the monotone (north-west corner) coupling of the sorted atoms. It
// does not look at the quantile representation; tests use it as an oracle.
double transport_lp_oracle(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

// d_W1(mu, delta_t) = int_0^t F + int_t^1 (1 - F) for measures on [0,1].
double dist_to_dirac(const Measure& mu, double t);

// Forward difference of t -> d_W1(mu, delta_t) mapped back to a level:
// (g + 1) / 2 with g the difference quotient over [t, t + h].
double cdf_from_dirac_distances(const Measure& mu, double t, double h);

// The closed set of s for which (1 - s) Q_mu + s Q_nu is nondecreasing.
// An empty bound means the range is unbounded on that side.
struct MonotoneRange {
  std::optional<double> lo;
  std::optional<double> hi;

  bool contains(double s) const { return (!lo || *lo <= s) && (!hi || s <= *hi); }
};

MonotoneRange monotone_range(const Measure& mu, const Measure& nu);

struct GeodesicPoint {
  double s;
  Measure measure;
};

// Displacement interpolation; s may leave [0,1] inside monotone_range.
GeodesicPoint geodesic_point(const Measure& mu, const Measure& nu, double s);

// int_lo^hi |f - g| over the common domain, exact on linear pieces.
double abs_difference_integral(const PiecewiseLinear& f, const PiecewiseLinear& g, double lo,
                               double hi);

}  // namespace wass1d
