#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wass1d/measure.hpp"
#include "wass1d/report.hpp"

namespace wass1d {

// Push-forward by x -> orientation * x + offset.
struct Trivial {
  int orientation = 1;
  double offset = 0.0;
};

// Exchanges distribution function and quantile function; measures on [0,1].
struct Flip {};

// Adds the quantile function of `nu`.
struct Translation {
  Measure nu;
};

// Reflects a measure through its barycenter.
struct BarycentricReflection {};

// The flow acting on finitely supported measures of the real line.
struct Exotic {
  double q = 0.0;
};

struct IsometryDescriptor;

// Items are applied right to left, like function composition.
struct Composition {
  std::vector<IsometryDescriptor> items;
};

struct IsometryDescriptor {
  std::variant<Trivial, Flip, Translation, BarycentricReflection, Exotic, Composition> kind;
};

// Where a descriptor is known to be distance preserving. An empty field
// means "any".
struct Scope {
  std::optional<Domain> domain;
  std::optional<double> p;
};

// Throws ScopeMismatch when a composition mixes incompatible domains.
Scope scope_of(const IsometryDescriptor& iso);

// Throws ScopeMismatch when the measure's domain is outside the scope, and
// NotDiscrete for the exotic flow on a measure with a continuous part.
Measure apply(const IsometryDescriptor& iso, const Measure& mu);

// Largest |q| accepted; beyond it e^{2q} saturates the level map.
inline constexpr double kMaxFlowParameter = 30.0;

// x e^{2q} / (1 + (e^{2q} - 1) x) for x in (0,1).
double h_q(double x, double q);
double h_q_inverse(double y, double q);

DiscreteMeasure exotic_apply_discrete(const DiscreteMeasure& mu, double q);

// Quantile of the flowed measure at level x in (0,1), evaluated from the
// pointwise operator formula. Works for any measure of the real line.
double exotic_quantile_at(const Measure& mu, double q, double x);

// exotic_quantile_at on the midpoints of grid_size equal cells of (0,1).
std::vector<std::pair<double, double>> exotic_apply_grid(const Measure& mu, double q,
                                                         int grid_size);

// Embedding of W_1(R) that replaces the distribution function on [-1,1) by a
// fixed nondecreasing function with values in [1/3, 2/3].
class SplitEmbedding {
 public:
  explicit SplitEmbedding(PiecewiseLinear middle);
  // The linear choice x -> 1/2 + x/6.
  static SplitEmbedding standard();

  const PiecewiseLinear& middle() const { return middle_; }

 private:
  PiecewiseLinear middle_;
};

Measure split_embedding_apply(const SplitEmbedding& e, const Measure& mu);

// Random discrete pairs in the descriptor's domain, compared in d_Wp.
// Passes iff every |d(phi mu, phi nu) - d(mu, nu)| <= 1e-9. Throws
// ScopeMismatch when the descriptor has no consistent domain.
VerificationReport verify_isometry(const IsometryDescriptor& iso, double p, int trials,
                                   std::uint64_t seed);

}  // namespace wass1d
