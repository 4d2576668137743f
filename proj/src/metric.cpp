#include "wass1d/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lp_integrals.hpp"
#include "wass1d/error.hpp"

namespace wass1d {

namespace {

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidP, "p must be finite and >= 1");
}

void check_same_domain(const Measure& mu, const Measure& nu) {
  if (mu.domain() != nu.domain()) fail(ErrorCode::DomainMismatch, "measures live on different domains");
}

double root_p(double total, double p) {
  if (p == 1.0) return total;
  if (p == 2.0) return std::sqrt(total);
  return std::pow(total, 1.0 / p);
}

// Jumps below this (relative to the value scale) are rounding noise.
constexpr double kJumpNoise = 1e-12;

}  // namespace

double wasserstein_distance(const Measure& mu, const Measure& nu, double p) {
  check_same_domain(mu, nu);
  check_p(p);
  double total = 0.0;
  for (const auto& piece : align(mu.quantile_function(), nu.quantile_function())) {
    total += detail::abs_power_integral(piece.f.intercept - piece.g.intercept,
                                        piece.f.slope - piece.g.slope, piece.hi - piece.lo, p);
  }
  return root_p(total, p);
}

double abs_difference_integral(const PiecewiseLinear& f, const PiecewiseLinear& g, double lo,
                               double hi) {
  double total = 0.0;
  for (const auto& piece : align(f, g)) {
    const double a = std::max(lo, piece.lo);
    const double b = std::min(hi, piece.hi);
    if (!(a < b)) continue;
    const double d1 = piece.f.slope - piece.g.slope;
    const double d0 = piece.f.intercept - piece.g.intercept + d1 * (a - piece.lo);
    total += detail::abs_power_integral(d0, d1, b - a, 1.0);
  }
  return total;
}

double wasserstein1_cdf(const Measure& mu, const Measure& nu) {
  check_same_domain(mu, nu);
  const double lo = std::min(mu.support_min(), nu.support_min()) - 1.0;
  const double hi = std::max(mu.support_max(), nu.support_max()) + 1.0;
  return abs_difference_integral(mu.cdf_function(lo, hi), nu.cdf_function(lo, hi), lo, hi);
}

double transport_lp_oracle(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  check_p(p);
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  std::size_t i = 0;
  std::size_t j = 0;
  double left_a = a[0].weight;
  double left_b = b[0].weight;
  double cost = 0.0;
  while (i < a.size() && j < b.size()) {
    const double mass = std::min(left_a, left_b);
    cost += mass * std::pow(std::abs(a[i].position - b[j].position), p);
    left_a -= mass;
    left_b -= mass;
    if (left_a <= 0.0 && ++i < a.size()) left_a = a[i].weight;
    if (left_b <= 0.0 && ++j < b.size()) left_b = b[j].weight;
  }
  return root_p(cost, p);
}

double dist_to_dirac(const Measure& mu, double t) {
  if (mu.domain() != Domain::UnitInterval)
    fail(ErrorCode::DomainMismatch, "distance to a Dirac mass is computed on [0,1]");
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "t must lie in [0,1]");
  const PiecewiseLinear cdf = mu.cdf_function(-1.0, 2.0);
  return cdf.integral(0.0, t) + ((1.0 - t) - cdf.integral(t, 1.0));
}

double cdf_from_dirac_distances(const Measure& mu, double t, double h) {
  if (!(t >= 0.0 && t < 1.0)) fail(ErrorCode::StepOutOfRange, "t must lie in [0,1)");
  if (!(h > 0.0) || t + h > 1.0) fail(ErrorCode::StepOutOfRange, "need h > 0 and t + h <= 1");
  const double g = (dist_to_dirac(mu, t + h) - dist_to_dirac(mu, t)) / h;
  return 0.5 * (g + 1.0);
}

MonotoneRange monotone_range(const Measure& mu, const Measure& nu) {
  check_same_domain(mu, nu);
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  // Every increment c0 + s c1 of the interpolated quantile must stay >= 0,
  // where c0 is the increment of mu and c0 + c1 the increment of nu.
  auto constrain = [&](double inc_mu, double inc_nu) {
    const double c1 = inc_nu - inc_mu;
    if (c1 > 0.0) lo = std::max(lo, -inc_mu / c1);
    if (c1 < 0.0) hi = std::min(hi, inc_mu / -c1);
  };
  const auto pieces = align(mu.quantile_function(), nu.quantile_function());
  const double scale = std::max({1.0, std::abs(mu.support_min()), std::abs(mu.support_max()),
                                 std::abs(nu.support_min()), std::abs(nu.support_max())});
  auto denoise = [&](double jump) { return std::abs(jump) <= kJumpNoise * scale ? 0.0 : jump; };
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& pc = pieces[k];
    constrain(pc.f.slope, pc.g.slope);
    if (k + 1 < pieces.size()) {
      const double len = pc.hi - pc.lo;
      const double jump_f = pieces[k + 1].f.intercept - (pc.f.intercept + pc.f.slope * len);
      const double jump_g = pieces[k + 1].g.intercept - (pc.g.intercept + pc.g.slope * len);
      constrain(denoise(jump_f), denoise(jump_g));
    }
  }
  MonotoneRange range;
  if (std::isfinite(lo)) range.lo = std::min(lo, 0.0);
  if (std::isfinite(hi)) range.hi = std::max(hi, 1.0);
  return range;
}

GeodesicPoint geodesic_point(const Measure& mu, const Measure& nu, double s) {
  check_same_domain(mu, nu);
  if (!std::isfinite(s)) fail(ErrorCode::InvalidArgument, "s must be finite");
  if (s == 0.0) return {s, mu};
  if (s == 1.0) return {s, nu};
  if ((s < 0.0 || s > 1.0) && !monotone_range(mu, nu).contains(s))
    fail(ErrorCode::NotMonotone, "interpolated quantile is not monotone");
  const PiecewiseLinear q =
      linear_combination(mu.quantile_function(), 1.0 - s, nu.quantile_function(), s);
  return {s, Measure::from_quantile(mu.domain(), q)};
}

}  // namespace wass1d
