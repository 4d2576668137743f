#include "wass1d/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wass1d/error.hpp"

namespace wass1d {

namespace {

// Relative slack for monotonicity and range checks on constructed quantiles.
constexpr double kMonotoneTol = 1e-12;

double value_scale(const PiecewiseLinear& q) {
  double s = 1.0;
  for (std::size_t k = 0; k < q.size(); ++k)
    s = std::max({s, std::abs(q.start_value(k)), std::abs(q.end_value(k))});
  return s;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::WeightSumOutOfTolerance: return "WeightSumOutOfTolerance";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidIntervalIsometry: return "InvalidIntervalIsometry";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::NotDiscrete: return "NotDiscrete";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::ScopeMismatch: return "ScopeMismatch";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::UnsortedPositions: return "UnsortedPositions";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::WeightError: return "WeightError";
    case ErrorCode::EqualEndpoints: return "EqualEndpoints";
    case ErrorCode::NotBisectable: return "NotBisectable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

const char* to_string(Domain d) noexcept {
  return d == Domain::RealLine ? "real" : "unit";
}

// ---------------------------------------------------------------------------
// DiscreteMeasure

DiscreteMeasure DiscreteMeasure::from_atoms(Domain domain, std::vector<Atom> atoms) {
  if (atoms.empty()) fail(ErrorCode::InvalidMeasure, "no atoms");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.position) || !std::isfinite(a.weight))
      fail(ErrorCode::InvalidMeasure, "non-finite atom");
    if (!(a.weight > 0.0))
      fail(ErrorCode::NonPositiveWeight, "weight " + std::to_string(a.weight));
    if (domain == Domain::UnitInterval && (a.position < 0.0 || a.position > 1.0))
      fail(ErrorCode::InvalidMeasure, "atom outside [0,1]");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance)
    fail(ErrorCode::WeightSumOutOfTolerance, "weights sum to " + std::to_string(total));

  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) { return l.position < r.position; });
  std::vector<Atom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().position == a.position)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  if (total != 1.0)
    for (auto& a : merged) a.weight /= total;
  return DiscreteMeasure(domain, std::move(merged));
}

Measure DiscreteMeasure::to_measure() const {
  std::vector<double> breaks{0.0};
  std::vector<Segment> segs;
  double cum = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    cum += atoms_[i].weight;
    const double level = (i + 1 == atoms_.size()) ? 1.0 : cum;
    if (!(level > breaks.back())) continue;  // weight lost to rounding
    breaks.push_back(level);
    segs.push_back({atoms_[i].position, 0.0});
  }
  return Measure::from_pieces(domain_, std::move(breaks), std::move(segs));
}

Measure from_atoms(Domain domain, std::vector<Atom> atoms) {
  return DiscreteMeasure::from_atoms(domain, std::move(atoms)).to_measure();
}

// ---------------------------------------------------------------------------
// Measure

Measure Measure::from_quantile(Domain domain, const PiecewiseLinear& quantile) {
  if (quantile.lower() != 0.0 || quantile.upper() != 1.0)
    fail(ErrorCode::InvalidMeasure, "quantile must be defined on [0,1)");
  const double tol = kMonotoneTol * value_scale(quantile);
  for (const auto& s : quantile.segments()) {
    if (s.slope < 0.0) fail(ErrorCode::InvalidMeasure, "negative slope");
  }
  if (!quantile.is_nondecreasing(tol)) fail(ErrorCode::NotMonotone, "quantile decreases");
  if (domain == Domain::UnitInterval) {
    const double lo = quantile.start_value(0);
    const double hi = quantile.end_value(quantile.size() - 1);
    if (lo < -kMonotoneTol || hi > 1.0 + kMonotoneTol)
      fail(ErrorCode::InvalidMeasure, "unit-interval measure leaves [0,1]");
  }
  return Measure(domain, quantile.simplified());
}

Measure Measure::from_pieces(Domain domain, std::vector<double> breaks,
                             std::vector<Segment> segments) {
  return from_quantile(domain, PiecewiseLinear(std::move(breaks), std::move(segments)));
}

Measure Measure::from_cdf(Domain domain, const PiecewiseLinear& cdf) {
  const double first = cdf.start_value(0);
  const double last = cdf.end_value(cdf.size() - 1);
  if (std::abs(first) > kMonotoneTol || std::abs(last - 1.0) > kMonotoneTol)
    fail(ErrorCode::InvalidMeasure, "distribution function must run from 0 to 1");
  Path path = swap_axes(to_path(cdf));
  // Pin the level axis to [0,1] exactly.
  for (auto& v : path) v.x = std::clamp(v.x, 0.0, 1.0);
  path.front().x = 0.0;
  path.back().x = 1.0;
  return from_quantile(domain, from_path(path));
}

Measure Measure::dirac(Domain domain, double position) {
  return from_pieces(domain, {0.0, 1.0}, {Segment{position, 0.0}});
}

Measure Measure::uniform(Domain domain, double lo, double hi) {
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "uniform needs lo < hi");
  return from_pieces(domain, {0.0, 1.0}, {Segment{lo, hi - lo}});
}

double Measure::quantile(double y) const {
  if (!(y > 0.0 && y < 1.0)) fail(ErrorCode::LevelOutOfRange, "level must lie in (0,1)");
  return quantile_(y);
}

double Measure::quantile_left(double y) const {
  if (!(y > 0.0 && y <= 1.0)) fail(ErrorCode::LevelOutOfRange, "level must lie in (0,1]");
  return quantile_.left_limit(y);
}

double Measure::cdf(double x) const {
  // Lebesgue measure of {y : Q(y) <= x}; only the last piece starting at or
  // below x can be partially covered.
  const auto segs = quantile_.segments();
  const auto knots = quantile_.knots();
  auto it = std::upper_bound(segs.begin(), segs.end(), x,
                             [](double v, const Segment& s) { return v < s.intercept; });
  if (it == segs.begin()) return 0.0;
  const auto k = static_cast<std::size_t>(it - segs.begin()) - 1;
  const auto& s = segs[k];
  if (s.slope == 0.0) return knots[k + 1];
  return std::min(knots[k + 1], knots[k] + (x - s.intercept) / s.slope);
}

double Measure::cdf_left(double x) const {
  const auto segs = quantile_.segments();
  const auto knots = quantile_.knots();
  auto it = std::lower_bound(segs.begin(), segs.end(), x,
                             [](const Segment& s, double v) { return s.intercept < v; });
  if (it == segs.begin()) return 0.0;
  const auto k = static_cast<std::size_t>(it - segs.begin()) - 1;
  const auto& s = segs[k];
  if (s.slope == 0.0) return knots[k + 1];
  return std::min(knots[k + 1], knots[k] + (x - s.intercept) / s.slope);
}

PiecewiseLinear Measure::cdf_function() const {
  return cdf_function(support_min() - 1.0, support_max() + 1.0);
}

PiecewiseLinear Measure::cdf_function(double lo, double hi) const {
  if (!(lo < support_min() && hi > support_max()))
    fail(ErrorCode::InvalidArgument, "window must strictly contain the support");
  Path path = swap_axes(to_path(quantile_));
  path.insert(path.begin(), Vertex{lo, 0.0});
  path.push_back(Vertex{hi, 1.0});
  return from_path(path);
}

bool Measure::is_discrete() const {
  return std::all_of(segments().begin(), segments().end(),
                     [](const Segment& s) { return s.slope == 0.0; });
}

bool Measure::is_dirac() const { return quantile_.size() == 1 && segments()[0].slope == 0.0; }

std::vector<Atom> Measure::atoms() const {
  if (!is_discrete()) fail(ErrorCode::NotDiscrete, "measure has a continuous part");
  std::vector<Atom> out;
  const auto knots = breaks();
  for (std::size_t k = 0; k < quantile_.size(); ++k)
    out.push_back({segments()[k].intercept, knots[k + 1] - knots[k]});
  return out;
}

DiscreteMeasure Measure::to_discrete() const { return DiscreteMeasure(domain_, atoms()); }

bool approx_same(const Measure& a, const Measure& b, double tol) {
  if (a.domain() != b.domain() || a.segments().size() != b.segments().size()) return false;
  for (std::size_t k = 0; k < a.breaks().size(); ++k)
    if (std::abs(a.breaks()[k] - b.breaks()[k]) > tol) return false;
  for (std::size_t k = 0; k < a.segments().size(); ++k) {
    if (std::abs(a.segments()[k].intercept - b.segments()[k].intercept) > tol) return false;
    if (std::abs(a.segments()[k].slope - b.segments()[k].slope) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Functionals and elementary maps

double barycenter(const Measure& mu) { return mu.quantile_function().integral(0.0, 1.0); }

Measure flip(const Measure& mu) {
  if (mu.domain() != Domain::UnitInterval)
    fail(ErrorCode::DomainMismatch, "flip is defined on the unit interval only");
  // The quantile of flip(mu) is F_mu restricted to [0,1).
  PiecewiseLinear cdf = mu.cdf_function();
  return Measure::from_quantile(Domain::UnitInterval, cdf.restrict(0.0, 1.0));
}

Measure pushforward_affine(const Measure& mu, int orientation, double offset) {
  if (orientation != 1 && orientation != -1)
    fail(ErrorCode::InvalidArgument, "orientation must be +1 or -1");
  if (mu.domain() == Domain::UnitInterval &&
      !((orientation == 1 && offset == 0.0) || (orientation == -1 && offset == 1.0)))
    fail(ErrorCode::InvalidIntervalIsometry, "only x and 1-x preserve [0,1]");

  const auto& q = mu.quantile_function();
  const auto knots = q.knots();
  std::vector<double> breaks;
  std::vector<Segment> segs;
  if (orientation == 1) {
    breaks.assign(knots.begin(), knots.end());
    for (const auto& s : q.segments()) segs.push_back({s.intercept + offset, s.slope});
  } else {
    breaks.push_back(0.0);
    for (std::size_t k = q.size(); k-- > 0;) {
      segs.push_back({offset - q.end_value(k), q.segments()[k].slope});
      breaks.push_back(k == 0 ? 1.0 : 1.0 - knots[k]);
    }
  }
  return Measure::from_pieces(mu.domain(), std::move(breaks), std::move(segs));
}

// ---------------------------------------------------------------------------
// Two-point chart

DiscreteMeasure two_point_from_param(const TwoPointParam& tp) {
  if (!std::isfinite(tp.x) || !std::isfinite(tp.sigma) || !std::isfinite(tp.p) || tp.sigma < 0.0)
    fail(ErrorCode::InvalidArgument, "two-point chart needs finite x, p and sigma >= 0");
  if (tp.sigma == 0.0) return DiscreteMeasure::from_atoms(Domain::RealLine, {{tp.x, 1.0}});
  const double ep = std::exp(tp.p);
  const double em = std::exp(-tp.p);
  // e^{-p}/(e^p + e^{-p}) = 1/(1 + e^{2p}), written to avoid overflow.
  const double w_left = 1.0 / (1.0 + std::exp(2.0 * tp.p));
  const double w_right = 1.0 / (1.0 + std::exp(-2.0 * tp.p));
  return DiscreteMeasure::from_atoms(
      Domain::RealLine, {{tp.x - tp.sigma * ep, w_left}, {tp.x + tp.sigma * em, w_right}});
}

TwoPointParam param_from_two_point(const DiscreteMeasure& mu) {
  const auto atoms = mu.atoms();
  if (atoms.size() > 2) fail(ErrorCode::TooManyAtoms, "more than two atoms");
  if (atoms.size() == 1) return {atoms[0].position, 0.0, 0.0};
  const auto& lo = atoms[0];
  const auto& hi = atoms[1];
  TwoPointParam tp;
  tp.p = 0.5 * std::log(hi.weight / lo.weight);
  tp.sigma = (hi.position - lo.position) / (std::exp(tp.p) + std::exp(-tp.p));
  tp.x = lo.weight * lo.position + hi.weight * hi.position;
  return tp;
}

}  // namespace wass1d
