#include "wass1d/unit_interval.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lp_integrals.hpp"
#include "wass1d/error.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/random.hpp"

namespace wass1d {

namespace {

constexpr int kMaxLadderLevel = 20;
constexpr int kBisectionIterations = 200;
constexpr double kBisectionTolerance = 1e-10;

void check_unit(const Measure& mu) {
  if (mu.domain() != Domain::UnitInterval)
    fail(ErrorCode::DomainMismatch, "expected a measure on [0,1]");
}

void check_level(int n) {
  if (n < 0 || n > kMaxLadderLevel) fail(ErrorCode::InvalidArgument, "ladder level out of range");
}

void check_p_above_one(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidP, "p must be finite and > 1");
}

Measure two_point_unit(double weight_at_zero) {
  std::vector<Atom> atoms;
  if (weight_at_zero > 0.0) atoms.push_back({0.0, weight_at_zero});
  if (weight_at_zero < 1.0) atoms.push_back({1.0, 1.0 - weight_at_zero});
  return from_atoms(Domain::UnitInterval, std::move(atoms));
}

}  // namespace

double slice_of(const Measure& mu) {
  check_unit(mu);
  return barycenter(mu);
}

std::pair<Measure, Measure> slice_extremal_pair(double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "t must lie in [0,1]");
  return {two_point_unit(1.0 - t), Measure::dirac(Domain::UnitInterval, t)};
}

Measure random_slice_member(Rng& rng, double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "t must lie in [0,1]");
  const DiscreteMeasure base = random_discrete(rng, Domain::UnitInterval);
  double m = 0.0;
  for (const auto& a : base.atoms()) m += a.weight * a.position;
  std::vector<Atom> atoms(base.atoms().begin(), base.atoms().end());
  for (auto& a : atoms) {
    if (m >= t) {
      a.position = m > 0.0 ? a.position * (t / m) : 0.0;
    } else {
      a.position = 1.0 - (1.0 - a.position) * ((1.0 - t) / (1.0 - m));
    }
    a.position = std::clamp(a.position, 0.0, 1.0);
  }
  return from_atoms(Domain::UnitInterval, std::move(atoms));
}

std::vector<Measure> qn_elements(int n) {
  check_level(n);
  const int count = 1 << n;
  const double denom = std::ldexp(1.0, n + 1);
  std::vector<Measure> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.push_back(two_point_unit((2.0 * k - 1.0) / denom));
  return out;
}

Measure mn_element(const std::vector<double>& positions) {
  const std::size_t count = positions.size();
  if (count == 0 || (count & (count - 1)) != 0)
    fail(ErrorCode::InvalidArgument, "the number of positions must be a power of two");
  for (std::size_t j = 0; j < count; ++j) {
    if (!(positions[j] >= 0.0 && positions[j] <= 1.0))
      fail(ErrorCode::PositionOutOfRange, "positions must lie in [0,1]");
    if (j > 0 && positions[j] < positions[j - 1])
      fail(ErrorCode::UnsortedPositions, "positions must be sorted");
  }
  std::vector<double> breaks;
  std::vector<Segment> segs;
  for (std::size_t j = 0; j < count; ++j) {
    breaks.push_back(static_cast<double>(j) / static_cast<double>(count));
    segs.push_back({positions[j], 0.0});
  }
  breaks.push_back(1.0);
  return Measure::from_pieces(Domain::UnitInterval, std::move(breaks), std::move(segs));
}

double block_minimizer(const Measure& mu, double lo, double hi, double p) {
  check_p_above_one(p);
  const PiecewiseLinear block = mu.quantile_function().restrict(lo, hi);
  double a_lo = block.start_value(0);
  double a_hi = block.end_value(block.size() - 1);
  if (a_lo == a_hi) return a_lo;

  // Derivative of the objective up to the factor -p; decreasing in a.
  auto slope_sign = [&](double a) {
    double total = 0.0;
    const auto knots = block.knots();
    for (std::size_t k = 0; k < block.size(); ++k) {
      const auto& s = block.segments()[k];
      total += detail::signed_power_integral(s.intercept - a, s.slope, knots[k + 1] - knots[k],
                                             p - 1.0);
    }
    return total;
  };
  for (int it = 0; it < kBisectionIterations && a_hi - a_lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (a_lo + a_hi);
    const double g = slope_sign(mid);
    if (g > 0.0) {
      a_lo = mid;
    } else if (g < 0.0) {
      a_hi = mid;
    } else {
      return mid;
    }
  }
  return 0.5 * (a_lo + a_hi);
}

NearestResult nearest_in_Mn(const Measure& mu, int n, double p) {
  check_p_above_one(p);
  check_unit(mu);
  check_level(n);
  const int count = 1 << n;
  std::vector<double> positions;
  positions.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double lo = static_cast<double>(k) / count;
    const double hi = static_cast<double>(k + 1) / count;
    double a = std::clamp(block_minimizer(mu, lo, hi, p), 0.0, 1.0);
    // Blocks of a nondecreasing quantile have nondecreasing minimizers; this
    // only guards against bisection round-off.
    if (!positions.empty()) a = std::max(a, positions.back());
    positions.push_back(a);
  }
  Measure nearest = mn_element(positions);
  const double d = wasserstein_distance(mu, nearest, p);
  return {std::move(nearest), d};
}

double t_star(double alpha, double p) {
  check_p_above_one(p);
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0,1)");
  // alpha^e / (alpha^e + (1-alpha)^e) written as a logistic function.
  const double e = 1.0 / (p - 1.0);
  const double r = e * (std::log1p(-alpha) - std::log(alpha));
  return 1.0 / (1.0 + std::exp(r));
}

Measure convex_hull_combination(const std::vector<std::pair<Measure, double>>& items) {
  if (items.empty()) fail(ErrorCode::WeightError, "no items");
  double total = 0.0;
  for (const auto& [m, w] : items) {
    if (!(w >= 0.0) || !std::isfinite(w)) fail(ErrorCode::WeightError, "weights must be >= 0");
    if (m.domain() != items.front().first.domain())
      fail(ErrorCode::DomainMismatch, "items live on different domains");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance)
    fail(ErrorCode::WeightError, "weights must sum to 1");

  std::optional<PiecewiseLinear> acc;
  for (const auto& [m, w] : items) {
    if (w == 0.0) continue;
    const PiecewiseLinear& q = m.quantile_function();
    acc = acc ? linear_combination(*acc, 1.0, q, w) : linear_combination(q, w, q, 0.0);
  }
  return Measure::from_quantile(items.front().first.domain(), *acc);
}

std::vector<std::pair<Measure, double>> ladder_decomposition(const std::vector<double>& positions) {
  mn_element(positions);  // validates the input
  const std::size_t count = positions.size();
  std::vector<std::pair<Measure, double>> items;
  items.emplace_back(Measure::dirac(Domain::UnitInterval, 1.0), positions.front());
  for (std::size_t j = 1; j < count; ++j) {
    const double w0 = static_cast<double>(j) / static_cast<double>(count);
    items.emplace_back(two_point_unit(w0), positions[j] - positions[j - 1]);
  }
  items.emplace_back(Measure::dirac(Domain::UnitInterval, 0.0), 1.0 - positions.back());
  return items;
}

}  // namespace wass1d
