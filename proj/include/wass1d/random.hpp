#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wass1d/measure.hpp"

namespace wass1d {

// SplitMix64 finalizer; derives independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  // Uniform point of the (n-1)-simplex.
  std::vector<double> simplex(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// 1..max_atoms atoms; positions 10 N(0,1) on the line, U(0,1) on [0,1];
// weights uniform on the simplex.
DiscreteMeasure random_discrete(Rng& rng, Domain domain, int max_atoms = 20);

// Quantile with up to max_pieces pieces mixing jumps and sloped pieces.
Measure random_piecewise(Rng& rng, Domain domain, int max_pieces = 8);

// Measure on [0,1] whose breaks and values are dyadic rationals with at most
// `bits` binary digits, so that reflections are computed without rounding.
Measure random_dyadic_unit(Rng& rng, int max_pieces = 8, int bits = 20);

// Adjacent pair: a discrete measure and a copy in which the level at which
// the quantile steps between two consecutive atoms has been moved.
std::pair<Measure, Measure> random_adjacent_pair(Rng& rng, int max_atoms = 12);

}  // namespace wass1d
