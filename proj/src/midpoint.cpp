#include "wass1d/midpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wass1d/error.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/random.hpp"

namespace wass1d {

namespace {

// "Reaches half the area" is decided up to this fraction of the area.
constexpr double kAreaSlack = 1e-13;
constexpr double kBisectableFloor = 1e-12;
constexpr double kProbeImprovement = 1e-12;
constexpr double kMidpointTolerance = 1e-10;
constexpr double kCertificateTolerance = 1e-9;

struct Window {
  double lo;
  double hi;
};

Window window_of(std::initializer_list<const Measure*> ms) {
  double lo = ms.begin()[0]->support_min();
  double hi = ms.begin()[0]->support_max();
  for (const Measure* m : ms) {
    lo = std::min(lo, m->support_min());
    hi = std::max(hi, m->support_max());
  }
  return {lo - 1.0, hi + 1.0};
}

void require_distinct(const Measure& mu, const Measure& nu) {
  if (mu.domain() != nu.domain()) fail(ErrorCode::DomainMismatch, "measures live on different domains");
  if (mu == nu) fail(ErrorCode::EqualEndpoints, "the two measures coincide");
}

// Smallest x at which int_{lower}^x |f - g| reaches `target`.
double area_split(const PiecewiseLinear& f, const PiecewiseLinear& g, double target) {
  const double slack = kAreaSlack * target;
  double cum = 0.0;
  for (const auto& pc : align(f, g)) {
    const double len = pc.hi - pc.lo;
    const double d0 = pc.f.intercept - pc.g.intercept;
    const double d1 = pc.f.slope - pc.g.slope;
    const double d_end = d0 + d1 * len;
    // Sub-pieces on which |f - g| = e0 + e1 s with a fixed sign.
    struct Sub {
      double x0, e0, e1, len;
    };
    Sub subs[2];
    int count = 0;
    if ((d0 > 0.0 && d_end < 0.0) || (d0 < 0.0 && d_end > 0.0)) {
      const double t = d0 / (d0 - d_end) * len;
      const double sign = d0 > 0.0 ? 1.0 : -1.0;
      subs[count++] = {pc.lo, std::abs(d0), sign * d1, t};
      subs[count++] = {pc.lo + t, 0.0, -sign * d1, len - t};
    } else {
      const double sign = (d0 + d_end >= 0.0) ? 1.0 : -1.0;
      subs[count++] = {pc.lo, std::abs(d0), sign * d1, len};
    }
    for (int i = 0; i < count; ++i) {
      const Sub& s = subs[i];
      const double area = s.len * (s.e0 + 0.5 * s.e1 * s.len);
      if (area > 0.0 && cum + area >= target - slack) {
        const double r = std::max(0.0, target - cum);
        const double disc = std::max(0.0, s.e0 * s.e0 + 2.0 * s.e1 * r);
        const double denom = s.e0 + std::sqrt(disc);
        const double step = denom > 0.0 ? 2.0 * r / denom : 0.0;
        return s.x0 + std::clamp(step, 0.0, s.len);
      }
      cum += area;
    }
  }
  return f.upper();
}

MidpointGeometry geometry_on(const Measure& mu, const Measure& nu, const Window& w) {
  const PiecewiseLinear fm = mu.cdf_function(w.lo, w.hi);
  const PiecewiseLinear fn = nu.cdf_function(w.lo, w.hi);
  MidpointGeometry g;
  g.distance = abs_difference_integral(fm, fn, w.lo, w.hi);
  if (!(g.distance > 0.0)) fail(ErrorCode::EqualEndpoints, "the two measures coincide");
  g.v = area_split(fm, fn, 0.5 * g.distance);
  const double quantile_area =
      abs_difference_integral(mu.quantile_function(), nu.quantile_function(), 0.0, 1.0);
  g.h = area_split(mu.quantile_function(), nu.quantile_function(), 0.5 * quantile_area);

  const PiecewiseLinear level = PiecewiseLinear::constant(w.lo, w.hi, g.h);
  const PiecewiseLinear low_m = pointwise_min(fm, level);
  const PiecewiseLinear low_n = pointwise_min(fn, level);
  const PiecewiseLinear high_m = pointwise_max(fm, level);
  const PiecewiseLinear high_n = pointwise_max(fn, level);
  g.alphas[0] = abs_difference_integral(low_m, low_n, w.lo, g.v);
  g.alphas[1] = abs_difference_integral(low_m, low_n, g.v, w.hi);
  g.alphas[2] = abs_difference_integral(high_m, high_n, g.v, w.hi);
  g.alphas[3] = abs_difference_integral(high_m, high_n, w.lo, g.v);
  return g;
}

// Builds both bisecting measures without checking that they are extremal.
BisectingPair build_bisecting(const Measure& mu, const Measure& nu, const MidpointGeometry& g) {
  // Orient so that F_left(v) <= h <= F_right(v-): "left" keeps the mass that
  // sits right of v.
  auto violation = [&](const Measure& a, const Measure& b) {
    return std::max({0.0, a.cdf(g.v) - g.h, g.h - b.cdf_left(g.v)});
  };
  const bool swapped = violation(nu, mu) < violation(mu, nu);
  const Measure& first = swapped ? nu : mu;
  const Measure& second = swapped ? mu : nu;
  const Domain domain = mu.domain();

  const double a = first.cdf_left(g.v);
  const double b = std::max(a, second.cdf(g.v));
  std::vector<PiecewiseLinear> parts;
  if (a > 0.0) parts.push_back(first.quantile_function().restrict(0.0, a));
  if (a < b) parts.push_back(PiecewiseLinear::constant(a, b, g.v));
  if (b < 1.0) parts.push_back(second.quantile_function().restrict(b, 1.0));
  Measure vertical = Measure::from_quantile(domain, concatenate(parts));

  Measure horizontal = Measure::from_quantile(
      domain, concatenate({second.quantile_function().restrict(0.0, g.h),
                           first.quantile_function().restrict(g.h, 1.0)}));
  return {std::move(vertical), std::move(horizontal), swapped, g};
}

}  // namespace

bool is_midpoint(const Measure& xi, const Measure& mu, const Measure& nu, double tol) {
  require_distinct(mu, nu);
  const double half = 0.5 * wasserstein1_cdf(mu, nu);
  return std::abs(wasserstein1_cdf(mu, xi) - half) <= tol &&
         std::abs(wasserstein1_cdf(xi, nu) - half) <= tol;
}

MidpointGeometry midpoint_geometry(const Measure& mu, const Measure& nu) {
  require_distinct(mu, nu);
  return geometry_on(mu, nu, window_of({&mu, &nu}));
}

BisectingPair bisecting_measures(const Measure& mu, const Measure& nu) {
  const MidpointGeometry g = midpoint_geometry(mu, nu);
  if (!(g.alphas[1] > kBisectableFloor * std::max(1.0, g.distance)))
    fail(ErrorCode::NotBisectable, "the lower-right quarter has no area");
  return build_bisecting(mu, nu, g);
}

Measure bisecting_vertical(const Measure& mu, const Measure& nu) {
  return bisecting_measures(mu, nu).vertical;
}

Measure bisecting_horizontal(const Measure& mu, const Measure& nu) {
  return bisecting_measures(mu, nu).horizontal;
}

std::optional<AdjacencyWitness> is_adjacent(const Measure& mu, const Measure& nu) {
  if (mu.domain() != nu.domain()) return std::nullopt;
  const Window w = window_of({&mu, &nu});
  const auto pieces = align(mu.cdf_function(w.lo, w.hi), nu.cdf_function(w.lo, w.hi));
  std::size_t first = pieces.size();
  std::size_t last = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].f == pieces[k].g) continue;
    if (first == pieces.size()) first = k;
    last = k;
  }
  if (first == pieces.size()) return std::nullopt;
  const double level_f = pieces[first].f.intercept;
  const double level_g = pieces[first].g.intercept;
  for (std::size_t k = first; k <= last; ++k) {
    const auto& pc = pieces[k];
    if (pc.f.slope != 0.0 || pc.g.slope != 0.0) return std::nullopt;
    if (pc.f.intercept != level_f || pc.g.intercept != level_g) return std::nullopt;
  }
  return AdjacencyWitness{pieces[first].lo, pieces[last].hi};
}

bool between_cdfs(const Measure& xi, const Measure& mu, const Measure& nu, double tol) {
  const Window w = window_of({&xi, &mu, &nu});
  const PiecewiseLinear fm = mu.cdf_function(w.lo, w.hi);
  const PiecewiseLinear fn = nu.cdf_function(w.lo, w.hi);
  const PiecewiseLinear fx = xi.cdf_function(w.lo, w.hi);
  const PiecewiseLinear lower = pointwise_min(fm, fn);
  const PiecewiseLinear upper = pointwise_max(fm, fn);
  for (const auto& pc : align(fx, lower)) {
    const double len = pc.hi - pc.lo;
    if (pc.f.intercept < pc.g.intercept - tol) return false;
    if (pc.f.intercept + pc.f.slope * len < pc.g.intercept + pc.g.slope * len - tol) return false;
  }
  for (const auto& pc : align(fx, upper)) {
    const double len = pc.hi - pc.lo;
    if (pc.f.intercept > pc.g.intercept + tol) return false;
    if (pc.f.intercept + pc.f.slope * len > pc.g.intercept + pc.g.slope * len + tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Diameter probe

namespace {

// Random nondecreasing function on [lo, hi) with values in [0,1], with
// occasional jumps.
PiecewiseLinear random_monotone(Rng& rng, double lo, double hi) {
  const int n = rng.integer(1, 10);
  std::vector<double> xs;
  std::vector<double> ys;
  for (int i = 0; i < n; ++i) {
    xs.push_back(rng.uniform(lo, hi));
    ys.push_back(rng.uniform());
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  Path path{{lo, 0.0}};
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (rng.integer(0, 2) == 0) path.push_back({xs[k], path.back().y});  // jump at xs[k]
    path.push_back({xs[k], ys[k]});
  }
  path.push_back({hi, 1.0});
  return from_path(path);
}

}  // namespace

ProbeResult midpoint_diameter_probe(const Measure& mu, const Measure& nu, int candidates,
                                    std::uint64_t seed) {
  require_distinct(mu, nu);
  if (candidates < 0) fail(ErrorCode::InvalidArgument, "candidate count must be >= 0");
  const Window w = window_of({&mu, &nu});
  const PiecewiseLinear fm = mu.cdf_function(w.lo, w.hi);
  const PiecewiseLinear fn = nu.cdf_function(w.lo, w.hi);
  const PiecewiseLinear lower = pointwise_min(fm, fn);
  const PiecewiseLinear upper = pointwise_max(fm, fn);
  const double distance = abs_difference_integral(fm, fn, w.lo, w.hi);
  const double half = 0.5 * distance;

  std::vector<Measure> found;
  std::vector<PiecewiseLinear> cdfs;
  auto consider = [&](const Measure& xi) {
    if (!between_cdfs(xi, mu, nu, 1e-12) || !is_midpoint(xi, mu, nu, kMidpointTolerance)) return;
    cdfs.push_back(xi.cdf_function(w.lo, w.hi));
    found.push_back(xi);
  };

  // Known midpoints first.
  try {
    const MidpointGeometry g = geometry_on(mu, nu, w);
    const BisectingPair pair = build_bisecting(mu, nu, g);
    consider(pair.vertical);
    consider(pair.horizontal);
  } catch (const Error&) {
    // Degenerate geometry; the random candidates still apply.
  }
  consider(geodesic_point(mu, nu, 0.5).measure);
  consider(Measure::from_cdf(mu.domain(), linear_combination(fm, 0.5, fn, 0.5)));

  Rng rng(seed);
  for (int c = 0; c < candidates; ++c) {
    const PiecewiseLinear shape = random_monotone(rng, w.lo, w.hi);
    auto clipped = [&](double tau) {
      return pointwise_max(lower, pointwise_min(upper, add_constant(shape, tau)));
    };
    // d(mu, .) moves from the area where F_mu > F_nu (tau = -1) to the
    // complementary area (tau = 1); bisect for half the distance.
    double t_lo = -1.0;
    double t_hi = 1.0;
    const double sign = abs_difference_integral(fm, clipped(t_lo), w.lo, w.hi) - half;
    for (int it = 0; it < 80 && t_hi - t_lo > 1e-15; ++it) {
      const double mid = 0.5 * (t_lo + t_hi);
      const double val = abs_difference_integral(fm, clipped(mid), w.lo, w.hi) - half;
      if (val == 0.0) {
        t_lo = t_hi = mid;
        break;
      }
      if ((val < 0.0) == (sign < 0.0)) {
        t_lo = mid;
      } else {
        t_hi = mid;
      }
    }
    try {
      consider(Measure::from_cdf(mu.domain(), clipped(0.5 * (t_lo + t_hi))));
    } catch (const Error&) {
      // A candidate that rounds to an invalid measure is skipped.
    }
  }

  ProbeResult result{-1.0, half, distance, mu, nu, static_cast<int>(found.size())};
  for (std::size_t i = 0; i < cdfs.size(); ++i) {
    for (std::size_t j = i + 1; j < cdfs.size(); ++j) {
      const double d = abs_difference_integral(cdfs[i], cdfs[j], w.lo, w.hi);
      if (d > result.best + kProbeImprovement) {
        result.best = d;
        result.first = found[i];
        result.second = found[j];
      }
    }
  }
  if (result.best < 0.0) result.best = 0.0;
  return result;
}

// ---------------------------------------------------------------------------
// Dirac certificate

double dirac_certificate_bound(const Measure& eta) {
  return 4.0 * ((eta.support_max() - eta.support_min()) + 1.0);
}

namespace {

bool certifies(const Measure& eta, const Measure& a, const Measure& b, double n) {
  if (!is_adjacent(a, b)) return false;
  if (std::abs(wasserstein1_cdf(a, b) - n) > kCertificateTolerance * std::max(1.0, n)) return false;
  try {
    const BisectingPair pair = bisecting_measures(a, b);
    return wasserstein1_cdf(eta, pair.vertical) <= kCertificateTolerance ||
           wasserstein1_cdf(eta, pair.horizontal) <= kCertificateTolerance;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::optional<std::pair<Measure, Measure>> dirac_certificate(const Measure& input, double n) {
  if (!(n > 0.0) || !std::isfinite(n)) fail(ErrorCode::InvalidArgument, "n must be positive");
  const Measure eta = Measure::from_quantile(Domain::RealLine, input.quantile_function());
  const auto& q = eta.quantile_function();
  const auto breaks = eta.breaks();
  const auto segs = eta.segments();
  const double inf = std::numeric_limits<double>::infinity();

  // An atom at c on levels [alpha, beta): move it by s to either side, where
  // the gap 2s times the mass beta - alpha is n.
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segs[k].slope != 0.0) continue;
    const double c = segs[k].intercept;
    const double mass = breaks[k + 1] - breaks[k];
    const double s = n / (2.0 * mass);
    const double room_left = k == 0 ? inf : c - q.end_value(k - 1);
    const double room_right = k + 1 == segs.size() ? inf : q.start_value(k + 1) - c;
    if (s > room_left || s > room_right) continue;
    Measure left = Measure::from_quantile(Domain::RealLine, overwrite(q, breaks[k], breaks[k + 1], c - s));
    Measure right = Measure::from_quantile(Domain::RealLine, overwrite(q, breaks[k], breaks[k + 1], c + s));
    if (certifies(eta, left, right, n)) return std::make_pair(std::move(left), std::move(right));
  }

  // A gap (a, b) at level gamma: shift the level by delta to either side.
  for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
    const double a = q.end_value(k);
    const double b = q.start_value(k + 1);
    if (!(b > a)) continue;
    const double gamma = breaks[k + 1];
    const double delta = n / (2.0 * (b - a));
    if (delta > gamma - eta.cdf_left(a) || delta > eta.cdf(b) - gamma) continue;
    Measure left = Measure::from_quantile(Domain::RealLine, overwrite(q, gamma, gamma + delta, a));
    Measure right = Measure::from_quantile(Domain::RealLine, overwrite(q, gamma - delta, gamma, b));
    if (certifies(eta, left, right, n)) return std::make_pair(std::move(left), std::move(right));
  }
  return std::nullopt;
}

}  // namespace wass1d
