#include "wass1d/isometry.hpp"

#include <cmath>
#include <string>

#include "wass1d/error.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/random.hpp"

namespace wass1d {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool preserves_unit_interval(const Trivial& t) {
  return (t.orientation == 1 && t.offset == 0.0) || (t.orientation == -1 && t.offset == 1.0);
}

void check_q(double q) {
  if (!std::isfinite(q) || std::abs(q) > kMaxFlowParameter)
    fail(ErrorCode::QOutOfRange, "|q| must not exceed 30");
}

// h_q on the closed interval, with the endpoints fixed exactly.
double level_map(double x, double q) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  // Extended precision keeps the result within about half an ulp.
  const long double lx = x;
  const long double lq = 2.0L * q;
  return static_cast<double>(lx * std::exp(lq) / (1.0L + std::expm1(lq) * lx));
}

}  // namespace

Scope scope_of(const IsometryDescriptor& iso) {
  return std::visit(
      overloaded{
          [](const Trivial& t) {
            Scope s;
            if (!preserves_unit_interval(t)) s.domain = Domain::RealLine;
            return s;
          },
          [](const Flip&) { return Scope{Domain::UnitInterval, 1.0}; },
          [](const Translation&) { return Scope{Domain::RealLine, std::nullopt}; },
          [](const BarycentricReflection&) { return Scope{Domain::RealLine, 2.0}; },
          [](const Exotic&) { return Scope{Domain::RealLine, 2.0}; },
          [](const Composition& c) {
            Scope s;
            for (const auto& item : c.items) {
              const Scope inner = scope_of(item);
              if (inner.domain) {
                if (s.domain && *s.domain != *inner.domain)
                  fail(ErrorCode::ScopeMismatch, "composition mixes domains");
                s.domain = inner.domain;
              }
              if (inner.p) {
                if (s.p && *s.p != *inner.p)
                  fail(ErrorCode::ScopeMismatch, "composition mixes exponents");
                s.p = inner.p;
              }
            }
            return s;
          },
      },
      iso.kind);
}

Measure apply(const IsometryDescriptor& iso, const Measure& mu) {
  const Scope scope = scope_of(iso);
  if (scope.domain && *scope.domain != mu.domain())
    fail(ErrorCode::ScopeMismatch,
         std::string("descriptor acts on the ") + to_string(*scope.domain) + " domain");
  return std::visit(
      overloaded{
          [&](const Trivial& t) { return pushforward_affine(mu, t.orientation, t.offset); },
          [&](const Flip&) { return flip(mu); },
          [&](const Translation& t) {
            return Measure::from_quantile(
                Domain::RealLine,
                linear_combination(mu.quantile_function(), 1.0, t.nu.quantile_function(), 1.0));
          },
          [&](const BarycentricReflection&) {
            return pushforward_affine(mu, -1, 2.0 * barycenter(mu));
          },
          [&](const Exotic& e) {
            check_q(e.q);
            return exotic_apply_discrete(mu.to_discrete(), e.q).to_measure();
          },
          [&](const Composition& c) {
            Measure out = mu;
            for (auto it = c.items.rbegin(); it != c.items.rend(); ++it) out = apply(*it, out);
            return out;
          },
      },
      iso.kind);
}

double h_q(double x, double q) {
  check_q(q);
  if (!(x > 0.0 && x < 1.0)) fail(ErrorCode::LevelOutOfRange, "level must lie in (0,1)");
  return level_map(x, q);
}

double h_q_inverse(double y, double q) { return h_q(y, -q); }

DiscreteMeasure exotic_apply_discrete(const DiscreteMeasure& mu, double q) {
  check_q(q);
  const auto atoms = mu.atoms();
  double mean = 0.0;
  for (const auto& a : atoms) mean += a.weight * a.position;

  // On the level interval of atom k the operator formula collapses to a
  // constant: the terms depending on the level cancel.
  const double grow = std::expm1(q);        // e^q - 1
  const double spread = 2.0 * std::sinh(q);  // e^q - e^{-q}
  std::vector<Atom> out;
  out.reserve(atoms.size());
  double level = 0.0;   // c_{k-1}
  double prefix = 0.0;  // int_0^{c_{k-1}} Q
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const double v = atoms[k].position;
    const double next_level = (k + 1 == atoms.size()) ? 1.0 : level + atoms[k].weight;
    const double position = v + grow * (v - mean) + spread * (prefix - v * level);
    const double weight = level_map(next_level, -q) - level_map(level, -q);
    out.push_back({position, weight});
    prefix += atoms[k].weight * v;
    level = next_level;
  }
  return DiscreteMeasure::from_atoms(Domain::RealLine, std::move(out));
}

double exotic_quantile_at(const Measure& mu, double q, double x) {
  if (mu.domain() != Domain::RealLine)
    fail(ErrorCode::ScopeMismatch, "the flow acts on measures of the real line");
  const double y = h_q(x, q);
  const double mean = barycenter(mu);
  const double eq = std::exp(q);
  const double emq = std::exp(-q);
  return -std::expm1(q) * mean + (eq + (emq - eq) * y) * mu.quantile(y) +
         (eq - emq) * mu.quantile_function().integral(0.0, y);
}

std::vector<std::pair<double, double>> exotic_apply_grid(const Measure& mu, double q,
                                                         int grid_size) {
  if (grid_size < 2) fail(ErrorCode::InvalidArgument, "grid_size must be at least 2");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) / grid_size;
    out.emplace_back(x, exotic_quantile_at(mu, q, x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Split embedding

SplitEmbedding::SplitEmbedding(PiecewiseLinear middle) : middle_(std::move(middle)) {
  constexpr double slack = 1e-15;
  if (middle_.lower() != -1.0 || middle_.upper() != 1.0)
    fail(ErrorCode::InvalidArgument, "middle part must be defined on [-1,1)");
  if (!middle_.is_nondecreasing(0.0)) fail(ErrorCode::NotMonotone, "middle part must be nondecreasing");
  for (std::size_t k = 0; k < middle_.size(); ++k) {
    if (middle_.start_value(k) < 1.0 / 3.0 - slack || middle_.end_value(k) > 2.0 / 3.0 + slack)
      fail(ErrorCode::InvalidArgument, "middle part must take values in [1/3, 2/3]");
  }
}

SplitEmbedding SplitEmbedding::standard() {
  return SplitEmbedding(PiecewiseLinear({-1.0, 1.0}, {Segment{1.0 / 3.0, 1.0 / 6.0}}));
}

namespace {

// x -> 3x + shift on the knots, y -> base + y/3 on the values.
PiecewiseLinear rescale_cdf_part(const PiecewiseLinear& f, double shift, double base) {
  std::vector<double> knots;
  for (double k : f.knots()) knots.push_back(3.0 * k + shift);
  std::vector<Segment> segs;
  for (const auto& s : f.segments()) segs.push_back({base + s.intercept / 3.0, s.slope / 9.0});
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

}  // namespace

Measure split_embedding_apply(const SplitEmbedding& e, const Measure& mu) {
  if (mu.domain() != Domain::RealLine)
    fail(ErrorCode::DomainMismatch, "the split embedding acts on measures of the real line");
  const double lo = std::min(mu.support_min(), 0.0) - 1.0;
  const double hi = std::max(mu.support_max(), 0.0) + 1.0;
  const PiecewiseLinear cdf = mu.cdf_function(lo, hi);
  PiecewiseLinear left = rescale_cdf_part(cdf.restrict(lo, 0.0), -1.0, 0.0);
  PiecewiseLinear right = rescale_cdf_part(cdf.restrict(0.0, hi), 1.0, 2.0 / 3.0);
  return Measure::from_cdf(Domain::RealLine, concatenate({left, e.middle(), right}));
}

// ---------------------------------------------------------------------------

VerificationReport verify_isometry(const IsometryDescriptor& iso, double p, int trials,
                                   std::uint64_t seed) {
  const Scope scope = scope_of(iso);
  const Domain domain = scope.domain.value_or(Domain::RealLine);
  VerificationReport report("isometry", 1e-9);
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, 0x150, static_cast<std::uint64_t>(t)));
    const Measure mu = random_discrete(rng, domain).to_measure();
    const Measure nu = random_discrete(rng, domain).to_measure();
    const double before = wasserstein_distance(mu, nu, p);
    const double after = wasserstein_distance(apply(iso, mu), apply(iso, nu), p);
    report.record(t, "distance", before, after);
  }
  return report;
}

}  // namespace wass1d
