#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "wass1d/measure.hpp"

namespace wass1d {

// |d(mu, xi) - D/2| <= tol and |d(xi, nu) - D/2| <= tol in W_1, D = d(mu, nu).
bool is_midpoint(const Measure& xi, const Measure& mu, const Measure& nu, double tol);

// Split of the region between the two distribution functions by the
// vertical line x = v and the horizontal line y = h, each of which halves its
// area D. alphas are the areas of the lower-left, lower-right, upper-right
// and upper-left quarters.
struct MidpointGeometry {
  double distance = 0.0;
  double v = 0.0;
  double h = 0.0;
  std::array<double, 4> alphas{};
};

MidpointGeometry midpoint_geometry(const Measure& mu, const Measure& nu);

struct BisectingPair {
  Measure vertical;    // distribution function glued at x = v
  Measure horizontal;  // quantile function glued at level h
  bool swapped;        // the roles of mu and nu were exchanged
  MidpointGeometry geometry;
};

// Throws NotBisectable when the lower-right quarter has no area.
BisectingPair bisecting_measures(const Measure& mu, const Measure& nu);

// Both outputs of bisecting_measures, one at a time.
Measure bisecting_vertical(const Measure& mu, const Measure& nu);
Measure bisecting_horizontal(const Measure& mu, const Measure& nu);

struct AdjacencyWitness {
  double a;
  double b;
};

// Exact test on the representations: the distribution functions agree off
// [a, b) and are both constant on [a, b).
std::optional<AdjacencyWitness> is_adjacent(const Measure& mu, const Measure& nu);

// min(F_mu, F_nu) <= F_xi <= max(F_mu, F_nu) everywhere, up to tol.
bool between_cdfs(const Measure& xi, const Measure& mu, const Measure& nu, double tol);

struct ProbeResult {
  double best = 0.0;      // largest distance found between two midpoints
  double half_distance = 0.0;
  double distance = 0.0;
  Measure first;
  Measure second;
  int midpoints = 0;      // candidates that passed is_midpoint
};

inline constexpr int kDefaultProbeCandidates = 2000;

// Random search over midpoints between the two distribution functions for
// the largest pairwise distance. The known extremal midpoints are seeded
// first; later candidates replace the best pair only on strict improvement.
ProbeResult midpoint_diameter_probe(const Measure& mu, const Measure& nu, int candidates,
                                    std::uint64_t seed);

// For eta and n, an adjacent pair at distance n whose bisecting measures
// contain eta. Only pairs aligned with eta's atoms and gaps are searched.
std::optional<std::pair<Measure, Measure>> dirac_certificate(const Measure& eta, double n);

// n beyond which no certificate exists for a measure that is not a Dirac mass.
double dirac_certificate_bound(const Measure& eta);

}  // namespace wass1d
