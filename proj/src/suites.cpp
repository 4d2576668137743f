#include "wass1d/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wass1d/error.hpp"
#include "wass1d/isometry.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/midpoint.hpp"
#include "wass1d/random.hpp"
#include "wass1d/unit_interval.hpp"

namespace wass1d {

namespace {

using Reports = std::vector<VerificationReport>;

Rng trial_rng(std::uint64_t seed, std::uint64_t stream, int trial) {
  return Rng(mix_seed(seed, stream, static_cast<std::uint64_t>(trial)));
}

Measure random_measure(Rng& rng, Domain domain) {
  if (rng.coin()) return random_discrete(rng, domain).to_measure();
  return random_piecewise(rng, domain);
}

std::string p_label(const char* name, double p) { return std::string(name) + " p=" + format_double(p); }

// ---------------------------------------------------------------------------

Reports distance_oracle(int trials, std::uint64_t seed) {
  VerificationReport oracle("distance-oracle", 1e-10);
  VerificationReport dual("w1-cdf-dual", 1e-12);
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 1, t);
    const DiscreteMeasure a = random_discrete(rng, Domain::RealLine);
    const DiscreteMeasure b = random_discrete(rng, Domain::RealLine);
    const Measure mu = a.to_measure();
    const Measure nu = b.to_measure();
    for (double p : ps)
      oracle.record(t, p_label("W", p), transport_lp_oracle(a, b, p), wasserstein_distance(mu, nu, p));
    dual.record(t, "W1 cdf side", wasserstein_distance(mu, nu, 1.0), wasserstein1_cdf(mu, nu));
  }
  return {oracle, dual};
}

Reports slice_diameter(int trials, std::uint64_t seed) {
  VerificationReport extremal("slice-extremal", 1e-12);
  VerificationReport membership("slice-membership", 1e-12);
  VerificationReport bound("slice-bound", 1e-12);
  const double ts[] = {0.1, 0.25, 0.5, 0.9};
  for (std::size_t i = 0; i < std::size(ts); ++i) {
    const double t = ts[i];
    const double diameter = 2.0 * t * (1.0 - t);
    const auto [a, b] = slice_extremal_pair(t);
    extremal.record(static_cast<int>(i), "extremal W1 t=" + format_double(t), diameter,
                    wasserstein_distance(a, b, 1.0));
    for (int k = 0; k < trials; ++k) {
      Rng rng = trial_rng(seed, 2 + i, k);
      const Measure mu = random_slice_member(rng, t);
      const Measure nu = random_slice_member(rng, t);
      membership.record(k, "slice t=" + format_double(t), t, slice_of(mu));
      bound.record(k, "W1 t=" + format_double(t), diameter, wasserstein_distance(mu, nu, 1.0),
                   Comparison::AtMost);
    }
  }
  return {extremal, membership, bound};
}

Reports klein_group(int trials, std::uint64_t seed) {
  VerificationReport exact("klein-relations-exact", 0.0);
  VerificationReport generic("klein-relations-generic", 1e-12);
  VerificationReport flip_iso("flip-isometry", 1e-10);
  VerificationReport refl_iso("reflection-isometry", 1e-10);
  auto r = [](const Measure& m) { return pushforward_affine(m, -1, 1.0); };
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 10, t);
    // Dyadic data makes both generators exact, so the relations can be
    // checked as equalities of representations.
    const Measure d = random_dyadic_unit(rng);
    exact.record_flag(t, "flip flip = id", flip(flip(d)) == d);
    exact.record_flag(t, "r r = id", r(r(d)) == d);
    exact.record_flag(t, "flip r = r flip", flip(r(d)) == r(flip(d)));

    const Measure mu = random_measure(rng, Domain::UnitInterval);
    const Measure nu = random_measure(rng, Domain::UnitInterval);
    generic.record(t, "flip flip", 0.0, wasserstein_distance(flip(flip(mu)), mu, 1.0));
    generic.record(t, "r r", 0.0, wasserstein_distance(r(r(mu)), mu, 1.0));
    generic.record(t, "flip r vs r flip", 0.0,
                   wasserstein_distance(flip(r(mu)), r(flip(mu)), 1.0));

    const double d0 = wasserstein_distance(mu, nu, 1.0);
    flip_iso.record(t, "W1", d0, wasserstein_distance(flip(mu), flip(nu), 1.0));
    refl_iso.record(t, "W1", d0, wasserstein_distance(r(mu), r(nu), 1.0));
  }
  return {exact, generic, flip_iso, refl_iso};
}

Reports ladder_bound(int trials, std::uint64_t seed) {
  VerificationReport bound("ladder-bound", 1e-9);
  VerificationReport strict("ladder-strict-off-qn", 0.0);
  VerificationReport equality("ladder-equality-on-qn", 1e-9);
  VerificationReport tstar("t-star-bisection", 1e-8);
  const double ps[] = {1.5, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 20, t);
    const Measure mu = random_measure(rng, Domain::UnitInterval);
    for (int n = 0; n <= 3; ++n) {
      for (double p : ps) {
        const double limit = std::pow(0.5, 1.0 + n / p);
        const double d = nearest_in_Mn(mu, n, p).distance;
        const std::string label = "n=" + std::to_string(n) + " p=" + format_double(p);
        bound.record(t, label, limit, d, Comparison::AtMost);
        strict.record_flag(t, label, d < limit - 1e-9);
      }
    }
  }
  int row = 0;
  for (int n = 0; n <= 3; ++n) {
    for (double p : ps) {
      for (const Measure& q : qn_elements(n)) {
        equality.record(row++, "n=" + std::to_string(n) + " p=" + format_double(p),
                        std::pow(0.5, 1.0 + n / p), nearest_in_Mn(q, n, p).distance);
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    Rng rng = trial_rng(seed, 21, t);
    const double alpha = rng.uniform(0.01, 0.99);
    const double p = rng.uniform(1.2, 6.0);
    const Measure mu = from_atoms(Domain::UnitInterval, {{0.0, 1.0 - alpha}, {1.0, alpha}});
    const double bisected = nearest_in_Mn(mu, 0, p).nearest.segments()[0].intercept;
    tstar.record(t, "alpha=" + format_double(alpha) + " p=" + format_double(p),
                 t_star(alpha, p), bisected);
  }
  return {bound, strict, equality, tstar};
}

Reports midpoint_suite(int trials, std::uint64_t seed) {
  VerificationReport alphas("alpha-identities", 1e-10);
  VerificationReport mids("bisecting-midpoints", 1e-10);
  VerificationReport spread("bisecting-distance", 1e-10);
  VerificationReport plateau("adjacent-plateau", 1e-9);
  VerificationReport extremal("adjacent-extremal-pair", 1e-9);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 30, t);
    const Measure mu = random_measure(rng, Domain::RealLine);
    const Measure nu = random_measure(rng, Domain::RealLine);
    if (mu == nu) continue;
    const MidpointGeometry g = midpoint_geometry(mu, nu);
    const auto& a = g.alphas;
    alphas.record(t, "a1-a3", 0.0, a[0] - a[2]);
    alphas.record(t, "a2-a4", 0.0, a[1] - a[3]);
    alphas.record(t, "sum", g.distance, a[0] + a[1] + a[2] + a[3]);
    alphas.record(t, "a1+a2", 0.5 * g.distance, a[0] + a[1]);
    BisectingPair pair = [&] {
      try {
        return std::optional<BisectingPair>(bisecting_measures(mu, nu));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotBisectable) throw;
        return std::optional<BisectingPair>();
      }
    }()
                             .value_or(BisectingPair{mu, nu, false, g});
    if (pair.vertical == mu) continue;  // not bisectable
    const double half = 0.5 * g.distance;
    mids.record(t, "d(mu vertical)", half, wasserstein1_cdf(mu, pair.vertical));
    mids.record(t, "d(vertical nu)", half, wasserstein1_cdf(pair.vertical, nu));
    mids.record(t, "d(mu horizontal)", half, wasserstein1_cdf(mu, pair.horizontal));
    mids.record(t, "d(horizontal nu)", half, wasserstein1_cdf(pair.horizontal, nu));
    const double d = wasserstein1_cdf(pair.vertical, pair.horizontal);
    spread.record(t, "d(vertical horizontal) >= D/2", half, d, Comparison::AtLeast);
    spread.record(t, "d(vertical horizontal) <= D", g.distance, d, Comparison::AtMost);
    spread.record(t, "d(vertical horizontal) = a1+a3", a[0] + a[2], d);
  }
  const int adjacent = std::max(1, trials / 10);
  for (int t = 0; t < adjacent; ++t) {
    Rng rng = trial_rng(seed, 31, t);
    const auto [mu, nu] = random_adjacent_pair(rng);
    const BisectingPair pair = bisecting_measures(mu, nu);
    const ProbeResult probe = midpoint_diameter_probe(mu, nu, 250, mix_seed(seed, 32, t));
    plateau.record(t, "probe diameter", probe.half_distance, probe.best);
    const double same = std::max(wasserstein1_cdf(probe.first, pair.vertical),
                                 wasserstein1_cdf(probe.second, pair.horizontal));
    const double crossed = std::max(wasserstein1_cdf(probe.first, pair.horizontal),
                                    wasserstein1_cdf(probe.second, pair.vertical));
    extremal.record(t, "distance to bisecting pair", 0.0, std::min(same, crossed));
  }
  return {alphas, mids, spread, plateau, extremal};
}

Reports dirac_suite(int trials, std::uint64_t seed) {
  VerificationReport diracs("dirac-certified", 1e-9);
  VerificationReport others("non-dirac-rejected", 0.0);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 40, t);
    const double c = 10.0 * rng.normal();
    const Measure eta = Measure::dirac(Domain::RealLine, c);
    for (int n = 1; n <= 8; ++n) {
      const auto cert = dirac_certificate(eta, n);
      const std::string label = "n=" + std::to_string(n);
      if (!cert) {
        diracs.record_flag(t, label + " certificate", false);
        continue;
      }
      diracs.record(t, label + " left atom", c - 0.5 * n, cert->first.support_min());
      diracs.record(t, label + " right atom", c + 0.5 * n, cert->second.support_min());
    }
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 41, t);
    DiscreteMeasure base = random_discrete(rng, Domain::RealLine);
    while (base.size() < 2) base = random_discrete(rng, Domain::RealLine);
    const Measure eta = base.to_measure();
    const double n = std::ceil(dirac_certificate_bound(eta)) + 1.0;
    others.record_flag(t, "n=" + format_double(n), !dirac_certificate(eta, n).has_value());
  }
  return {diracs, others};
}

// Largest coordinate difference of two discrete measures with the same
// number of atoms; infinity otherwise.
double atom_gap(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    gap = std::max(gap, std::abs(a.atoms()[i].position - b.atoms()[i].position));
    gap = std::max(gap, std::abs(a.atoms()[i].weight - b.atoms()[i].weight));
  }
  return gap;
}

Reports exotic_two_point(int trials, std::uint64_t seed) {
  VerificationReport rep("exotic-two-point", 1e-12);
  const double xs[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  const double sigmas[] = {0.0, 0.25, 0.5, 1.0, 2.0};
  const double shapes[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  const double qs[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  int row = 0;
  auto check = [&](double x, double sigma, double p, double q) {
    const DiscreteMeasure out = exotic_apply_discrete(two_point_from_param({x, sigma, p}), q);
    const DiscreteMeasure want = two_point_from_param({x, sigma, p + q});
    rep.record(row++,
               "x=" + format_double(x) + " sigma=" + format_double(sigma) + " p=" +
                   format_double(p) + " q=" + format_double(q),
               0.0, atom_gap(out, want));
  };
  for (double x : xs)
    for (double s : sigmas)
      for (double p : shapes)
        for (double q : qs) check(x, s, p, q);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 50, t);
    check(rng.uniform(-2.0, 2.0), rng.uniform(0.0, 2.0), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0));
  }
  return {rep};
}

Reports exotic_isometry(int trials, std::uint64_t seed) {
  VerificationReport iso("exotic-w2-isometry", 1e-9);
  VerificationReport diracs("exotic-dirac-distances", 1e-9);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 51, t);
    const double q = rng.uniform(-2.0, 2.0);
    const IsometryDescriptor phi{Exotic{q}};
    const Measure mu = random_discrete(rng, Domain::RealLine).to_measure();
    const Measure nu = random_discrete(rng, Domain::RealLine).to_measure();
    iso.record(t, "W2 q=" + format_double(q), wasserstein_distance(mu, nu, 2.0),
               wasserstein_distance(apply(phi, mu), apply(phi, nu), 2.0));
    const Measure dirac = Measure::dirac(Domain::RealLine, 10.0 * rng.normal());
    diracs.record(t, "W2 to a Dirac mass", wasserstein_distance(mu, dirac, 2.0),
                  wasserstein_distance(apply(phi, mu), dirac, 2.0));
  }
  return {iso, diracs};
}

Reports exotic_flow(int trials, std::uint64_t seed) {
  VerificationReport flow("exotic-flow-law", 1e-10);
  VerificationReport fixed("exotic-fixes-diracs", 0.0);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 52, t);
    const double q1 = rng.uniform(-1.5, 1.5);
    const double q2 = rng.uniform(-1.5, 1.5);
    const DiscreteMeasure mu = random_discrete(rng, Domain::RealLine);
    const DiscreteMeasure composed = exotic_apply_discrete(exotic_apply_discrete(mu, q2), q1);
    const DiscreteMeasure direct = exotic_apply_discrete(mu, q1 + q2);
    flow.record(t, "q=" + format_double(q1) + " q'=" + format_double(q2), 0.0,
                atom_gap(composed, direct));
    const DiscreteMeasure dirac = DiscreteMeasure::from_atoms(Domain::RealLine, {{10.0 * rng.normal(), 1.0}});
    fixed.record_flag(t, "Dirac fixed", exotic_apply_discrete(dirac, q1) == dirac);
  }
  return {flow, fixed};
}

Reports exotic_oracle(int trials, std::uint64_t seed) {
  VerificationReport rep("exotic-grid-oracle", 1e-12);
  constexpr int kLevelsPerMeasure = 50;
  constexpr double kBreakClearance = 1e-9;
  int row = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 53, t);
    const double q = rng.uniform(-1.0, 1.0);
    const Measure mu = random_discrete(rng, Domain::RealLine).to_measure();
    const Measure out = exotic_apply_discrete(mu.to_discrete(), q).to_measure();
    int done = 0;
    while (done < kLevelsPerMeasure) {
      const double x = rng.uniform();
      if (!(x > 0.0)) continue;
      const auto br = out.breaks();
      const bool near_break = std::any_of(br.begin(), br.end(), [&](double b) {
        return std::abs(b - x) < kBreakClearance;
      });
      if (near_break) continue;
      rep.record(row++, "level " + format_double(x), exotic_quantile_at(mu, q, x), out.quantile(x));
      ++done;
    }
  }
  return {rep};
}

Reports exotic_w1_witness(int trials, std::uint64_t seed) {
  VerificationReport rep("exotic-w1-witness", 0.0);
  const IsometryDescriptor phi{Exotic{0.7}};
  double best = 0.0;
  int best_trial = 0;
  for (int t = 0; t < trials && best <= 1e-3; ++t) {
    Rng rng = trial_rng(seed, 54, t);
    const Measure mu = random_discrete(rng, Domain::RealLine, 4).to_measure();
    const Measure nu = random_discrete(rng, Domain::RealLine, 4).to_measure();
    const double gap = std::abs(wasserstein_distance(apply(phi, mu), apply(phi, nu), 1.0) -
                                wasserstein_distance(mu, nu, 1.0));
    if (gap > best) {
      best = gap;
      best_trial = t;
    }
  }
  rep.record(best_trial, "W1 distortion q=0.7", 1e-3, best, Comparison::AtLeast);
  return {rep};
}

Reports embedding_gallery(int trials, std::uint64_t seed) {
  VerificationReport uni("translation-uniform", 1e-10);
  VerificationReport two("translation-two-point", 1e-10);
  VerificationReport split("split-embedding", 1e-10);
  VerificationReport ranges("embedding-ranges", 0.0);
  const IsometryDescriptor by_uniform{Translation{Measure::uniform(Domain::RealLine, 0.0, 1.0)}};
  const IsometryDescriptor by_two_point{
      Translation{from_atoms(Domain::RealLine, {{-1.0, 0.5}, {1.0, 0.5}})}};
  const SplitEmbedding e = SplitEmbedding::standard();
  const double lo_level = e.middle()(-1.0);
  const double hi_level = e.middle().left_limit(1.0);
  const double ps[] = {1.0, 2.0, 3.0};

  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 60, t);
    const Measure mu = random_measure(rng, Domain::RealLine);
    const Measure nu = random_measure(rng, Domain::RealLine);
    const Measure mu_u = apply(by_uniform, mu);
    const Measure nu_u = apply(by_uniform, nu);
    const Measure mu_t = apply(by_two_point, mu);
    const Measure nu_t = apply(by_two_point, nu);
    for (double p : ps) {
      const double d = wasserstein_distance(mu, nu, p);
      uni.record(t, p_label("W", p), d, wasserstein_distance(mu_u, nu_u, p));
      two.record(t, p_label("W", p), d, wasserstein_distance(mu_t, nu_t, p));
    }
    const Measure mu_s = split_embedding_apply(e, mu);
    const Measure nu_s = split_embedding_apply(e, nu);
    split.record(t, "W1", wasserstein_distance(mu, nu, 1.0), wasserstein_distance(mu_s, nu_s, 1.0));

    for (const Measure* m : {&mu_u, &nu_u}) {
      const auto segs = m->segments();
      ranges.record_flag(t, "uniform translate slopes >= 1",
                         std::all_of(segs.begin(), segs.end(),
                                     [](const Segment& s) { return s.slope >= 1.0; }));
    }
    for (const Measure* m : {&mu_t, &nu_t}) {
      const auto br = m->breaks();
      const bool has_half = std::find(br.begin(), br.end(), 0.5) != br.end();
      const double jump = m->quantile(0.5) - m->quantile_left(0.5);
      ranges.record_flag(t, "two-point translate jumps at 1/2", has_half && jump > 0.0);
    }
    ranges.record_flag(t, "split images agree on (-1 1)",
                       mu_s.quantile_function().restrict(lo_level, hi_level) ==
                           nu_s.quantile_function().restrict(lo_level, hi_level));
  }
  const Measure image = split_embedding_apply(e, Measure::dirac(Domain::RealLine, 0.0));
  ranges.record_flag(0, "split image of delta_0 inside [-1 1]",
                     image.support_min() >= -1.0 && image.support_max() <= 1.0);
  return {uni, two, split, ranges};
}

// Measure on [0,1] whose sloped pieces have density at most 3/2.
Measure bounded_density_unit(Rng& rng) {
  const int m = rng.integer(1, 6);
  std::vector<double> breaks{0.0};
  for (int k = 1; k < m; ++k) breaks.push_back(rng.uniform(0.0, 1.0));
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Segment> segs;
  double value = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (k > 0) value += rng.uniform(0.0, 0.1);
    const double slope = rng.coin() ? 1.0 : 0.0;
    segs.push_back({value, slope});
    value += slope * (breaks[k + 1] - breaks[k]);
  }
  const double shrink = 1.0 / std::max(1.0, value);
  const double offset = rng.uniform(0.0, 1.0 - value * shrink);
  for (auto& s : segs) {
    s.intercept = offset + s.intercept * shrink;
    s.slope *= shrink;
  }
  return Measure::from_pieces(Domain::UnitInterval, std::move(breaks), std::move(segs));
}

Reports cdf_recovery(int trials, std::uint64_t seed) {
  VerificationReport fd("cdf-recovery-small-step", 1e-6);
  VerificationReport exact("cdf-recovery-flat-step", 1e-12);
  constexpr double kStep = 1e-6;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 70, t);
    const Measure mu = rng.coin() ? random_discrete(rng, Domain::UnitInterval).to_measure()
                                  : bounded_density_unit(rng);
    const double x = rng.uniform(0.0, 1.0 - kStep);
    fd.record(t, "h=1e-6", mu.cdf(x), cdf_from_dirac_distances(mu, x, kStep));

    // A point where the distribution function is flat up to the next knot,
    // and a step of half that distance.
    const PiecewiseLinear cdf = mu.cdf_function(-1.0, 2.0);
    for (int attempt = 0; attempt < 100; ++attempt) {
      const double s = rng.uniform(0.0, 1.0);
      const std::size_t k = cdf.locate(s);
      if (cdf.segments()[k].slope != 0.0) continue;
      const double h = 0.5 * (std::min(cdf.knots()[k + 1], 1.0) - s);
      if (h < 1e-3) continue;
      exact.record(t, "flat h=" + format_double(h), mu.cdf(s), cdf_from_dirac_distances(mu, s, h));
      break;
    }
  }
  return {fd, exact};
}

struct Entry {
  SuiteInfo info;
  std::function<Reports(int, std::uint64_t)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"distance-oracle", "closed-form W_p against the monotone coupling", 500}, distance_oracle},
      {{"slice-diameter", "diameter 2t(1-t) of the slices of W_1([0,1])", 2000}, slice_diameter},
      {{"klein-group", "flip and reflection relations and isometry", 200}, klein_group},
      {{"ladder-bound", "distance to equal-weight ladders and t*", 500}, ladder_bound},
      {{"midpoint-geometry", "area decomposition, bisecting measures, probe", 500}, midpoint_suite},
      {{"dirac-characterization", "adjacent-pair certificates of Dirac masses", 50}, dirac_suite},
      {{"exotic-two-point", "flow on two-point measures shifts the shape", 0}, exotic_two_point},
      {{"exotic-isometry", "flow preserves W_2", 500}, exotic_isometry},
      {{"exotic-flow", "flow law and fixed Dirac masses", 500}, exotic_flow},
      {{"exotic-oracle", "discrete flow against the operator formula", 20}, exotic_oracle},
      {{"exotic-w1-witness", "the flow distorts W_1", 2000}, exotic_w1_witness},
      {{"embedding-gallery", "translations and the split embedding", 300}, embedding_gallery},
      {{"cdf-recovery", "distribution function from Dirac distances", 100}, cdf_recovery},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

bool has_suite(const std::string& id) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const Entry& e) { return e.info.id == id; });
}

std::vector<VerificationReport> run_suite(const std::string& id, int trials, std::uint64_t seed) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e.run(trials > 0 ? trials : e.info.default_trials, seed);
  }
  fail(ErrorCode::UnknownSuite, "no suite named '" + id + "'");
}

}  // namespace wass1d
