#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wass1d {

// One linear piece. On [knot_k, knot_{k+1}) the value is
// intercept + slope * (x - knot_k).
struct Segment {
  double intercept = 0.0;
  double slope = 0.0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Right-continuous piecewise-linear function on [lower(), upper()) that may
// jump at interior knots. Quantile functions and distribution functions are
// both stored this way.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<double> knots, std::vector<Segment> segments);

  static PiecewiseLinear constant(double lo, double hi, double value);

  double lower() const { return knots_.front(); }
  double upper() const { return knots_.back(); }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  std::span<const double> knots() const { return knots_; }
  std::span<const Segment> segments() const { return segments_; }

  // Index k with knot_k <= x < knot_{k+1}, clamped to the valid range.
  std::size_t locate(double x) const;

  double operator()(double x) const;
  double left_limit(double x) const;
  double start_value(std::size_t k) const { return segments_[k].intercept; }
  // Value approached from the left at knot_{k+1}.
  double end_value(std::size_t k) const;

  // Exact integral over [lo, hi] intersected with the domain.
  double integral(double lo, double hi) const;

  // The same function on the sub-domain [lo, hi); requires lower() <= lo < hi <= upper().
  PiecewiseLinear restrict(double lo, double hi) const;

  // Merges neighbouring pieces that continue each other exactly.
  PiecewiseLinear simplified() const;

  bool is_nondecreasing(double tol) const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<double> knots_;
  std::vector<Segment> segments_;
};

// A piece of the common refinement of two functions; f and g carry their
// intercepts evaluated at lo.
struct AlignedPiece {
  double lo;
  double hi;
  Segment f;
  Segment g;
};

// Common refinement over the intersection of the two domains. Knots are
// merged by exact comparison.
std::vector<AlignedPiece> align(const PiecewiseLinear& f, const PiecewiseLinear& g);

// alpha * f + beta * g on the common refinement.
PiecewiseLinear linear_combination(const PiecewiseLinear& f, double alpha,
                                   const PiecewiseLinear& g, double beta);

PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g);

PiecewiseLinear add_constant(const PiecewiseLinear& f, double c);

// Joins functions whose domains are contiguous, left to right.
PiecewiseLinear concatenate(const std::vector<PiecewiseLinear>& parts);

// f with the constant `value` on [lo, hi); requires lower() <= lo < hi <= upper().
PiecewiseLinear overwrite(const PiecewiseLinear& f, double lo, double hi, double value);

// Vertices of the completed graph of a nondecreasing function: jumps become
// vertical steps, so both coordinates are nondecreasing along the path.
struct Vertex {
  double x;
  double y;
};
using Path = std::vector<Vertex>;

Path to_path(const PiecewiseLinear& f);

// Inverse of to_path. Steps with positive x-extent become segments; steps with
// zero x-extent become jumps. The y coordinate is forced nondecreasing, which
// absorbs rounding of the order of a few ulps; anything larger is rejected.
PiecewiseLinear from_path(const Path& path);

Path swap_axes(Path path);

}  // namespace wass1d
