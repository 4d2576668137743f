#include "wass1d/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wass1d/error.hpp"

namespace wass1d {

namespace {

// Relative slack accepted when a path steps backwards because of rounding.
constexpr double kPathSlack = 1e-9;
constexpr double kJoinSnap = 1e-13;

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<double> knots, std::vector<Segment> segments)
    : knots_(std::move(knots)), segments_(std::move(segments)) {
  if (segments_.empty() || knots_.size() != segments_.size() + 1)
    fail(ErrorCode::InvalidMeasure, "knot/segment count mismatch");
  for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
    if (!(knots_[k] < knots_[k + 1]))
      fail(ErrorCode::InvalidMeasure, "knots must be strictly increasing");
  }
  for (const auto& s : segments_) {
    if (!std::isfinite(s.intercept) || !std::isfinite(s.slope))
      fail(ErrorCode::InvalidMeasure, "non-finite segment coefficient");
  }
}

PiecewiseLinear PiecewiseLinear::constant(double lo, double hi, double value) {
  return PiecewiseLinear({lo, hi}, {Segment{value, 0.0}});
}

std::size_t PiecewiseLinear::locate(double x) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  if (it == knots_.begin()) return 0;
  auto k = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return std::min(k, segments_.size() - 1);
}

double PiecewiseLinear::operator()(double x) const {
  const auto k = locate(x);
  return segments_[k].intercept + segments_[k].slope * (x - knots_[k]);
}

double PiecewiseLinear::left_limit(double x) const {
  auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
  std::size_t k = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  k = std::min(k, segments_.size() - 1);
  return segments_[k].intercept + segments_[k].slope * (x - knots_[k]);
}

double PiecewiseLinear::end_value(std::size_t k) const {
  return segments_[k].intercept + segments_[k].slope * (knots_[k + 1] - knots_[k]);
}

double PiecewiseLinear::integral(double lo, double hi) const {
  lo = std::max(lo, lower());
  hi = std::min(hi, upper());
  if (!(lo < hi)) return 0.0;
  double total = 0.0;
  for (std::size_t k = locate(lo); k < segments_.size() && knots_[k] < hi; ++k) {
    const double a = std::max(lo, knots_[k]);
    const double b = std::min(hi, knots_[k + 1]);
    if (!(a < b)) continue;
    const auto& s = segments_[k];
    const double va = s.intercept + s.slope * (a - knots_[k]);
    total += (b - a) * (va + 0.5 * s.slope * (b - a));
  }
  return total;
}

PiecewiseLinear PiecewiseLinear::restrict(double lo, double hi) const {
  if (!(lower() <= lo && lo < hi && hi <= upper()))
    fail(ErrorCode::InvalidArgument, "restriction outside the domain");
  std::vector<double> knots{lo};
  std::vector<Segment> segs;
  for (std::size_t k = locate(lo); k < segments_.size() && knots_[k] < hi; ++k) {
    const double a = std::max(lo, knots_[k]);
    const double b = std::min(hi, knots_[k + 1]);
    if (!(a < b)) continue;
    const auto& s = segments_[k];
    segs.push_back({s.intercept + s.slope * (a - knots_[k]), s.slope});
    knots.push_back(b);
  }
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

PiecewiseLinear PiecewiseLinear::simplified() const {
  std::vector<double> knots{knots_.front()};
  std::vector<Segment> segs{segments_.front()};
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    const Segment& prev = segs.back();
    const double prev_end = prev.intercept + prev.slope * (knots_[k] - knots.back());
    if (segments_[k].slope == prev.slope && segments_[k].intercept == prev_end) {
      continue;  // knot_k is not a real breakpoint
    }
    knots.push_back(knots_[k]);
    segs.push_back(segments_[k]);
  }
  knots.push_back(knots_.back());
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

bool PiecewiseLinear::is_nondecreasing(double tol) const {
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (segments_[k].slope < 0.0) return false;
    if (k + 1 < segments_.size() && end_value(k) > segments_[k + 1].intercept + tol) return false;
  }
  return true;
}

std::vector<AlignedPiece> align(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  const double lo = std::max(f.lower(), g.lower());
  const double hi = std::min(f.upper(), g.upper());
  std::vector<AlignedPiece> out;
  if (!(lo < hi)) return out;
  const auto fk = f.knots();
  const auto gk = g.knots();
  std::size_t i = f.locate(lo);
  std::size_t j = g.locate(lo);
  double x = lo;
  while (x < hi) {
    const double next = std::min({fk[i + 1], gk[j + 1], hi});
    const auto& fs = f.segments()[i];
    const auto& gs = g.segments()[j];
    out.push_back({x, next, {fs.intercept + fs.slope * (x - fk[i]), fs.slope},
                   {gs.intercept + gs.slope * (x - gk[j]), gs.slope}});
    x = next;
    if (fk[i + 1] == next && i + 1 < f.size()) ++i;
    if (gk[j + 1] == next && j + 1 < g.size()) ++j;
  }
  return out;
}

PiecewiseLinear linear_combination(const PiecewiseLinear& f, double alpha,
                                   const PiecewiseLinear& g, double beta) {
  const auto pieces = align(f, g);
  if (pieces.empty()) fail(ErrorCode::InvalidArgument, "functions have disjoint domains");
  std::vector<double> knots{pieces.front().lo};
  std::vector<Segment> segs;
  segs.reserve(pieces.size());
  for (const auto& p : pieces) {
    segs.push_back({alpha * p.f.intercept + beta * p.g.intercept,
                    alpha * p.f.slope + beta * p.g.slope});
    knots.push_back(p.hi);
  }
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

namespace {

template <class Pick>
PiecewiseLinear pointwise_select(const PiecewiseLinear& f, const PiecewiseLinear& g, Pick pick) {
  const auto pieces = align(f, g);
  if (pieces.empty()) fail(ErrorCode::InvalidArgument, "functions have disjoint domains");
  std::vector<double> knots{pieces.front().lo};
  std::vector<Segment> segs;
  auto emit = [&](double a, double b, const Segment& s, double origin) {
    if (!(a < b)) return;
    segs.push_back({s.intercept + s.slope * (a - origin), s.slope});
    knots.push_back(b);
  };
  for (const auto& p : pieces) {
    const double len = p.hi - p.lo;
    const double d0 = p.f.intercept - p.g.intercept;
    const double d1 = (p.f.intercept + p.f.slope * len) - (p.g.intercept + p.g.slope * len);
    if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
      // Strict crossing inside the piece.
      const double t = d0 / (d0 - d1) * len;
      const double cross = std::clamp(p.lo + t, p.lo, p.hi);
      const bool first_f = pick(d0);
      emit(p.lo, cross, first_f ? p.f : p.g, p.lo);
      emit(cross, p.hi, first_f ? p.g : p.f, p.lo);
    } else {
      const double d = (d0 != 0.0) ? d0 : d1;
      emit(p.lo, p.hi, pick(d) ? p.f : p.g, p.lo);
    }
  }
  return PiecewiseLinear(std::move(knots), std::move(segs)).simplified();
}

}  // namespace

PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return pointwise_select(f, g, [](double f_minus_g) { return f_minus_g <= 0.0; });
}

PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return pointwise_select(f, g, [](double f_minus_g) { return f_minus_g >= 0.0; });
}

PiecewiseLinear add_constant(const PiecewiseLinear& f, double c) {
  std::vector<double> knots(f.knots().begin(), f.knots().end());
  std::vector<Segment> segs(f.segments().begin(), f.segments().end());
  for (auto& s : segs) s.intercept += c;
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

PiecewiseLinear concatenate(const std::vector<PiecewiseLinear>& parts) {
  std::vector<double> knots;
  std::vector<Segment> segs;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    if (knots.empty()) {
      knots.push_back(part.lower());
    } else if (knots.back() != part.lower()) {
      fail(ErrorCode::InvalidArgument, "pieces are not contiguous");
    }
    knots.insert(knots.end(), part.knots().begin() + 1, part.knots().end());
    segs.insert(segs.end(), part.segments().begin(), part.segments().end());
  }
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

PiecewiseLinear overwrite(const PiecewiseLinear& f, double lo, double hi, double value) {
  std::vector<PiecewiseLinear> parts;
  if (f.lower() < lo) parts.push_back(f.restrict(f.lower(), lo));
  parts.push_back(PiecewiseLinear::constant(lo, hi, value));
  if (hi < f.upper()) parts.push_back(f.restrict(hi, f.upper()));
  return concatenate(parts);
}

Path to_path(const PiecewiseLinear& f) {
  Path path;
  path.reserve(2 * f.size());
  const auto knots = f.knots();
  for (std::size_t k = 0; k < f.size(); ++k) {
    path.push_back({knots[k], f.start_value(k)});
    double end = f.end_value(k);
    if (k + 1 < f.size()) {
      // Continuous joins computed along two routes can disagree in the last
      // bits; snap them so that swapped paths do not grow ulp-wide pieces.
      const double next = f.start_value(k + 1);
      if (std::abs(end - next) <= kJoinSnap * std::max(1.0, std::abs(next))) end = next;
    }
    path.push_back({knots[k + 1], end});
  }
  return path;
}

PiecewiseLinear from_path(const Path& path) {
  if (path.size() < 2) fail(ErrorCode::InvalidMeasure, "path needs at least two vertices");
  double scale = 1.0;
  for (const auto& v : path) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  const double slack = kPathSlack * scale;

  std::vector<double> knots;
  std::vector<Segment> segs;
  double x_prev = path.front().x;
  double y_prev = path.front().y;
  for (std::size_t i = 1; i < path.size(); ++i) {
    double x = path[i].x;
    double y = path[i].y;
    if (x < x_prev - slack || y < y_prev - slack)
      fail(ErrorCode::NotMonotone, "path is not monotone");
    x = std::max(x, x_prev);
    y = std::max(y, y_prev);
    if (x > x_prev) {
      if (knots.empty()) knots.push_back(x_prev);
      segs.push_back({y_prev, (y - y_prev) / (x - x_prev)});
      knots.push_back(x);
    }
    x_prev = x;
    y_prev = y;
  }
  if (segs.empty()) fail(ErrorCode::InvalidMeasure, "path has no extent");
  return PiecewiseLinear(std::move(knots), std::move(segs));
}

Path swap_axes(Path path) {
  for (auto& v : path) std::swap(v.x, v.y);
  return path;
}

}  // namespace wass1d
