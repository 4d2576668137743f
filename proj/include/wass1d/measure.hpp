#pragma once

#include <span>
#include <vector>

#include "wass1d/piecewise.hpp"

namespace wass1d {

enum class Domain { RealLine, UnitInterval };

const char* to_string(Domain d) noexcept;

// Tolerance on the total mass accepted by from_atoms before renormalizing.
inline constexpr double kWeightSumTolerance = 1e-9;

struct Atom {
  double position;
  double weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

class Measure;

// Finitely supported measure in canonical form: positions strictly
// increasing, weights positive and summing to one.
class DiscreteMeasure {
 public:
  // Sorts, merges equal positions, checks and renormalizes the weights.
  static DiscreteMeasure from_atoms(Domain domain, std::vector<Atom> atoms);

  Domain domain() const { return domain_; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  Measure to_measure() const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  DiscreteMeasure(Domain d, std::vector<Atom> atoms) : domain_(d), atoms_(std::move(atoms)) {}
  friend class Measure;

  Domain domain_ = Domain::RealLine;
  std::vector<Atom> atoms_;
};

// A probability measure with bounded support, stored through its
// right-continuous quantile function: piecewise linear on (0,1) with
// nonnegative slopes and upward jumps. Immutable.
class Measure {
 public:
  // Validates and canonicalizes (collinear neighbouring pieces are merged).
  static Measure from_quantile(Domain domain, const PiecewiseLinear& quantile);
  static Measure from_pieces(Domain domain, std::vector<double> breaks,
                             std::vector<Segment> segments);
  // Builds the measure whose distribution function is `cdf`. The function
  // must be nondecreasing, start at 0 and end at 1.
  static Measure from_cdf(Domain domain, const PiecewiseLinear& cdf);
  static Measure dirac(Domain domain, double position);
  static Measure uniform(Domain domain, double lo, double hi);

  Domain domain() const { return domain_; }
  const PiecewiseLinear& quantile_function() const { return quantile_; }
  std::span<const double> breaks() const { return quantile_.knots(); }
  std::span<const Segment> segments() const { return quantile_.segments(); }

  // F^{-1}(y) for y in (0,1); right-continuous.
  double quantile(double y) const;
  // lim_{s -> y-} F^{-1}(s) for y in (0,1].
  double quantile_left(double y) const;
  // F(x) = mu((-inf, x]).
  double cdf(double x) const;
  // F(x-) = mu((-inf, x)).
  double cdf_left(double x) const;

  // The distribution function on [support_min() - 1, support_max() + 1].
  // It vanishes to the left of that window and equals 1 to the right.
  PiecewiseLinear cdf_function() const;
  // The distribution function on a window [lo, hi) that strictly contains
  // the support.
  PiecewiseLinear cdf_function(double lo, double hi) const;

  double support_min() const { return quantile_.start_value(0); }
  double support_max() const { return quantile_.end_value(quantile_.size() - 1); }

  bool is_discrete() const;
  bool is_dirac() const;
  // Atoms of a discrete measure; throws NotDiscrete otherwise.
  std::vector<Atom> atoms() const;
  DiscreteMeasure to_discrete() const;

  // Same domain and bit-identical canonical representation.
  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  Measure(Domain d, PiecewiseLinear q) : domain_(d), quantile_(std::move(q)) {}

  Domain domain_ = Domain::RealLine;
  PiecewiseLinear quantile_;
};

// Convenience: DiscreteMeasure::from_atoms(...).to_measure().
Measure from_atoms(Domain domain, std::vector<Atom> atoms);

// Representations agree piece by piece within `tol` (breaks and coefficients).
bool approx_same(const Measure& a, const Measure& b, double tol);

double barycenter(const Measure& mu);

// F_{flip(mu)} = F_mu^{-1}. Only defined on the unit interval.
Measure flip(const Measure& mu);

// Push-forward by x -> orientation * x + offset. On the unit interval only the
// identity (+1, 0) and the reflection (-1, 1) are allowed.
Measure pushforward_affine(const Measure& mu, int orientation, double offset);

// The chart (x, sigma, p) on measures with at most two atoms.
struct TwoPointParam {
  double x = 0.0;
  double sigma = 0.0;
  double p = 0.0;
};

DiscreteMeasure two_point_from_param(const TwoPointParam& tp);
TwoPointParam param_from_two_point(const DiscreteMeasure& mu);

}  // namespace wass1d
