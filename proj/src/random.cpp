#include "wass1d/random.hpp"

#include <algorithm>
#include <cmath>

namespace wass1d {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream * 0x100000001b3ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> Rng::simplex(int n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : w) {
    do x = expo(engine_); while (!(x > 0.0));
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

DiscreteMeasure random_discrete(Rng& rng, Domain domain, int max_atoms) {
  const int n = rng.integer(1, max_atoms);
  const auto weights = rng.simplex(n);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) {
    const double x = domain == Domain::RealLine ? 10.0 * rng.normal() : rng.uniform();
    atoms.push_back({x, weights[static_cast<std::size_t>(i)]});
  }
  return DiscreteMeasure::from_atoms(domain, std::move(atoms));
}

namespace {

std::vector<double> sorted_levels(Rng& rng, int pieces) {
  std::vector<double> inner;
  while (static_cast<int>(inner.size()) < pieces - 1) {
    const double u = rng.uniform();
    if (u > 0.0 && std::find(inner.begin(), inner.end(), u) == inner.end()) inner.push_back(u);
  }
  std::sort(inner.begin(), inner.end());
  std::vector<double> breaks{0.0};
  breaks.insert(breaks.end(), inner.begin(), inner.end());
  breaks.push_back(1.0);
  return breaks;
}

}  // namespace

Measure random_piecewise(Rng& rng, Domain domain, int max_pieces) {
  const int m = rng.integer(1, max_pieces);
  const auto breaks = sorted_levels(rng, m);
  std::vector<Segment> segs;
  double value = domain == Domain::RealLine ? 5.0 * rng.normal() : 0.0;
  for (int k = 0; k < m; ++k) {
    if (k > 0 && rng.integer(0, 2) != 0) value += rng.uniform(0.0, 3.0);
    const double slope = rng.coin() ? 0.0 : rng.uniform(0.0, 8.0);
    segs.push_back({value, slope});
    value += slope * (breaks[static_cast<std::size_t>(k) + 1] - breaks[static_cast<std::size_t>(k)]);
  }
  if (domain == Domain::UnitInterval) {
    // Squeeze the values affinely into a random sub-interval of [0,1].
    const double span = value - segs.front().intercept;
    const double lo = rng.uniform(0.0, 0.5);
    const double width = rng.uniform(0.0, 1.0 - lo);
    const double scale = span > 0.0 ? width / span : 0.0;
    for (auto& s : segs) {
      s.intercept = std::clamp(lo + scale * s.intercept, 0.0, 1.0);
      s.slope *= scale;
    }
    if (span == 0.0) {
      const double c = rng.uniform();
      for (auto& s : segs) s.intercept = c;
    }
  }
  return Measure::from_pieces(domain, breaks, std::move(segs));
}

Measure random_dyadic_unit(Rng& rng, int max_pieces, int bits) {
  const double unit = std::ldexp(1.0, -bits);
  const int grid = 1 << bits;
  const int m = rng.integer(1, max_pieces);
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < m - 1) {
    const int c = rng.integer(1, grid - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> breaks{0.0};
  for (int c : cuts) breaks.push_back(c * unit);
  breaks.push_back(1.0);

  // Slopes are powers of two so that every end value and every swapped slope
  // is exact; jumps are multiples of the grid unit.
  std::vector<Segment> segs;
  double value = 0.0;
  for (int k = 0; k < m; ++k) {
    if (k > 0 && rng.coin()) value += rng.integer(1, 64) * unit * 64.0;
    const double slope = rng.coin() ? 0.0 : std::ldexp(1.0, rng.integer(-2, 2));
    segs.push_back({value, slope});
    value += slope * (breaks[static_cast<std::size_t>(k) + 1] - breaks[static_cast<std::size_t>(k)]);
  }
  int e = 0;
  while (value > std::ldexp(1.0, e)) ++e;
  const double shrink = std::ldexp(1.0, -e);
  const double room = 1.0 - value * shrink;
  const double offset = std::floor(rng.uniform(0.0, room) / unit) * unit;
  for (auto& s : segs) {
    s.intercept = offset + s.intercept * shrink;
    s.slope *= shrink;
  }
  return Measure::from_pieces(Domain::UnitInterval, std::move(breaks), std::move(segs));
}

std::pair<Measure, Measure> random_adjacent_pair(Rng& rng, int max_atoms) {
  DiscreteMeasure base = random_discrete(rng, Domain::RealLine, max_atoms);
  while (base.size() < 2) base = random_discrete(rng, Domain::RealLine, max_atoms);
  const Measure mu = base.to_measure();
  std::vector<double> breaks(mu.breaks().begin(), mu.breaks().end());
  std::vector<Segment> segs(mu.segments().begin(), mu.segments().end());
  const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(segs.size()) - 1));
  double level = breaks[k];
  while (level == breaks[k] || !(level > breaks[k - 1]) || !(level < breaks[k + 1]))
    level = rng.uniform(breaks[k - 1], breaks[k + 1]);
  breaks[k] = level;
  const Measure nu = Measure::from_pieces(Domain::RealLine, std::move(breaks), std::move(segs));
  if (rng.coin()) return {nu, mu};
  return {mu, nu};
}

}  // namespace wass1d
