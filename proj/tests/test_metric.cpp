#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "wass1d/metric.hpp"

using namespace wass1d;
using namespace wass1d::testing;

TEST(Distance, DiracPairIsPointDistance) {
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
    EXPECT_DOUBLE_EQ(wasserstein_distance(real_dirac(0.0), real_dirac(1.0), p), 1.0) << p;
    EXPECT_NEAR(wasserstein_distance(real_dirac(-2.5), real_dirac(4.0), p), 6.5, 1e-13) << p;
  }
}

TEST(Distance, HalfMassMovedByOne) {
  EXPECT_DOUBLE_EQ(wasserstein_distance(unit_dirac(0.0), unit_atoms({{0.0, 0.5}, {1.0, 0.5}}), 1.0),
                   0.5);
}

TEST(Distance, TwoPointAgainstUniformInW2) {
  // int_0^{1/4} y^2 + int_{1/4}^1 (1-y)^2 = 7/48.
  const Measure mu = unit_atoms({{0.0, 0.25}, {1.0, 0.75}});
  const double closed = wasserstein_distance(mu, unit_uniform(), 2.0);
  EXPECT_NEAR(closed, std::sqrt(7.0 / 48.0), 1e-15);

  constexpr int kCells = 10000;
  std::vector<Atom> cells;
  for (int i = 0; i < kCells; ++i) cells.push_back({(i + 0.5) / kCells, 1.0 / kCells});
  const auto grid = DiscreteMeasure::from_atoms(Domain::UnitInterval, cells);
  const double oracle = transport_lp_oracle(mu.to_discrete(), grid, 2.0);
  EXPECT_NEAR(oracle, closed, 1e-3);
}

TEST(Distance, Errors) {
  EXPECT_EQ(code_of([] { wasserstein_distance(real_dirac(0.0), real_dirac(1.0), 0.5); }),
            ErrorCode::InvalidP);
  EXPECT_EQ(code_of([] { wasserstein_distance(real_dirac(0.0), real_dirac(1.0), NAN); }),
            ErrorCode::InvalidP);
  EXPECT_EQ(code_of([] { wasserstein_distance(real_dirac(0.0), unit_dirac(1.0), 1.0); }),
            ErrorCode::DomainMismatch);
}

TEST(Oracle, Examples) {
  const auto d0 = DiscreteMeasure::from_atoms(Domain::RealLine, {{0.0, 1.0}});
  const auto d1 = DiscreteMeasure::from_atoms(Domain::RealLine, {{1.0, 1.0}});
  EXPECT_DOUBLE_EQ(transport_lp_oracle(d0, d1, 2.0), 1.0);
  const auto two = DiscreteMeasure::from_atoms(Domain::RealLine, {{0.0, 0.5}, {1.0, 0.5}});
  const auto half = DiscreteMeasure::from_atoms(Domain::RealLine, {{0.5, 1.0}});
  EXPECT_DOUBLE_EQ(transport_lp_oracle(two, half, 2.0), 0.5);
}

TEST(Oracle, MatchesClosedFormOnRandomPairs) {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_discrete(rng, Domain::RealLine);
    const auto b = random_discrete(rng, Domain::RealLine);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      EXPECT_NEAR(wasserstein_distance(a.to_measure(), b.to_measure(), p),
                  transport_lp_oracle(a, b, p), 1e-10);
    }
  }
}

TEST(Metric, Axioms) {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const Measure a = random_discrete(rng, Domain::RealLine).to_measure();
    const Measure b = random_discrete(rng, Domain::RealLine).to_measure();
    const Measure c = random_discrete(rng, Domain::RealLine).to_measure();
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double ab = wasserstein_distance(a, b, p);
      EXPECT_EQ(ab, wasserstein_distance(b, a, p));
      EXPECT_LE(ab, wasserstein_distance(a, c, p) + wasserstein_distance(c, b, p) + 1e-10);
      EXPECT_EQ(wasserstein_distance(a, a, p), 0.0);
      if (!(a == b)) {
        EXPECT_GT(ab, 0.0);
      }
    }
  }
}

TEST(Metric, DualW1Formulas) {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const Measure a = random_any(rng, Domain::RealLine);
    const Measure b = random_any(rng, Domain::RealLine);
    EXPECT_NEAR(wasserstein_distance(a, b, 1.0), wasserstein1_cdf(a, b), 1e-12);
  }
}

TEST(Metric, TriangleThroughIntervalIsSaturated) {
  Rng rng(24);
  for (int t = 0; t < 300; ++t) {
    const Measure mu = random_any(rng, Domain::UnitInterval);
    EXPECT_NEAR(wasserstein_distance(unit_dirac(0.0), mu, 1.0) +
                    wasserstein_distance(mu, unit_dirac(1.0), 1.0),
                1.0, 1e-12);
  }
}

TEST(Metric, GeneralPAgreesWithQuadratureFreeCases) {
  // Piecewise-constant difference: the integrand is constant on every piece.
  const Measure a = real_atoms({{0.0, 0.25}, {1.0, 0.75}});
  const Measure b = real_atoms({{2.0, 0.5}, {4.0, 0.5}});
  const double p = 2.5;
  const double expected = std::pow(0.25 * std::pow(2.0, p) + 0.25 * std::pow(1.0, p) + 0.5 * std::pow(3.0, p), 1.0 / p);
  EXPECT_NEAR(wasserstein_distance(a, b, p), expected, 1e-13);
  // Uniform against a Dirac at its left end: (int_0^1 y^p)^{1/p}.
  EXPECT_NEAR(wasserstein_distance(unit_uniform(), unit_dirac(0.0), p),
              std::pow(1.0 / (p + 1.0), 1.0 / p), 1e-13);
  // A short piece with nearly cancelling end values.
  const Measure c = Measure::from_pieces(Domain::RealLine, {0.0, 1.0}, {{10.0, 1e-4}});
  EXPECT_NEAR(wasserstein_distance(c, real_dirac(0.0), p),
              std::pow((std::pow(10.0001, p + 1.0) - std::pow(10.0, p + 1.0)) / ((p + 1.0) * 1e-4),
                       1.0 / p),
              1e-9);
}

// --- Dirac distances --------------------------------------------------------

TEST(DistToDirac, Examples) {
  EXPECT_DOUBLE_EQ(dist_to_dirac(unit_atoms({{0.0, 0.5}, {1.0, 0.5}}), 0.5), 0.5);
  EXPECT_DOUBLE_EQ(dist_to_dirac(unit_dirac(0.2), 0.7), 0.5);
  EXPECT_DOUBLE_EQ(dist_to_dirac(unit_dirac(0.9), 0.1), 0.8);
  EXPECT_DOUBLE_EQ(dist_to_dirac(unit_uniform(), 0.0), 0.5);
  EXPECT_EQ(code_of([] { dist_to_dirac(real_dirac(0.0), 0.5); }), ErrorCode::DomainMismatch);
}

TEST(DistToDirac, MatchesDistance) {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const Measure mu = random_any(rng, Domain::UnitInterval);
    const double s = rng.uniform();
    EXPECT_NEAR(dist_to_dirac(mu, s), wasserstein_distance(mu, unit_dirac(s), 1.0), 1e-12);
  }
}

TEST(CdfRecovery, Examples) {
  EXPECT_NEAR(cdf_from_dirac_distances(unit_atoms({{0.0, 0.5}, {1.0, 0.5}}), 0.3, 0.1), 0.5, 1e-12);
  EXPECT_NEAR(cdf_from_dirac_distances(unit_dirac(0.4), 0.6, 1e-4), 1.0, 1e-12);
  EXPECT_NEAR(cdf_from_dirac_distances(unit_uniform(), 0.37, 1e-6), 0.37, 1e-6);
}

TEST(CdfRecovery, Errors) {
  const Measure mu = unit_uniform();
  EXPECT_EQ(code_of([&] { cdf_from_dirac_distances(mu, 0.5, 0.0); }), ErrorCode::StepOutOfRange);
  EXPECT_EQ(code_of([&] { cdf_from_dirac_distances(mu, 0.9, 0.2); }), ErrorCode::StepOutOfRange);
  EXPECT_EQ(code_of([&] { cdf_from_dirac_distances(mu, -0.1, 0.05); }), ErrorCode::StepOutOfRange);
}

// --- geodesics --------------------------------------------------------------

TEST(Geodesic, Endpoints) {
  const Measure mu = real_atoms({{0.0, 0.5}, {1.0, 0.5}});
  const Measure nu = real_dirac(3.0);
  EXPECT_EQ(geodesic_point(mu, nu, 0.0).measure, mu);
  EXPECT_EQ(geodesic_point(mu, nu, 1.0).measure, nu);
  EXPECT_EQ(geodesic_point(real_dirac(0.0), real_dirac(1.0), 0.5).measure, real_dirac(0.5));
}

TEST(Geodesic, SplitsDistanceInHalves) {
  const Measure mu = real_atoms({{0.0, 0.5}, {1.0, 0.5}});
  const Measure nu = real_dirac(0.5);
  EXPECT_DOUBLE_EQ(wasserstein_distance(mu, nu, 2.0), 0.5);
  const Measure mid = geodesic_point(mu, nu, 0.5).measure;
  EXPECT_NEAR(wasserstein_distance(mu, mid, 2.0), 0.25, 1e-15);
  EXPECT_NEAR(wasserstein_distance(mid, nu, 2.0), 0.25, 1e-15);
}

TEST(Geodesic, ConstantSpeed) {
  Rng rng(26);
  for (int t = 0; t < 200; ++t) {
    const Measure mu = random_any(rng, Domain::RealLine);
    const Measure nu = random_any(rng, Domain::RealLine);
    const double s = rng.uniform();
    const double r = rng.uniform();
    const Measure gs = geodesic_point(mu, nu, s).measure;
    const Measure gr = geodesic_point(mu, nu, r).measure;
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      EXPECT_NEAR(wasserstein_distance(gs, gr, p), std::abs(s - r) * wasserstein_distance(mu, nu, p),
                  1e-10);
    }
  }
}

TEST(Geodesic, OutsideRangeIsRejected) {
  EXPECT_EQ(code_of([] { geodesic_point(unit_uniform(), unit_dirac(0.0), 1.5); }),
            ErrorCode::NotMonotone);
  const Measure extended = geodesic_point(real_dirac(0.0), real_dirac(1.0), 2.0).measure;
  EXPECT_EQ(extended, real_dirac(2.0));
}

TEST(MonotoneRange, Examples) {
  const Measure mu = real_atoms({{0.0, 0.3}, {2.0, 0.7}});
  const auto same = monotone_range(mu, mu);
  EXPECT_FALSE(same.lo.has_value());
  EXPECT_FALSE(same.hi.has_value());

  const auto from_dirac = monotone_range(unit_dirac(0.0), unit_atoms({{0.2, 0.5}, {0.9, 0.5}}));
  EXPECT_TRUE(from_dirac.contains(0.0));
  EXPECT_TRUE(from_dirac.contains(1e6));
  EXPECT_FALSE(from_dirac.hi.has_value());

  // (1 - s) y has slope 1 - s, so the range is (-inf, 1].
  const auto uni = monotone_range(unit_uniform(), unit_dirac(0.0));
  EXPECT_FALSE(uni.lo.has_value());
  ASSERT_TRUE(uni.hi.has_value());
  EXPECT_DOUBLE_EQ(*uni.hi, 1.0);
}

TEST(MonotoneRange, AlwaysContainsUnitInterval) {
  Rng rng(27);
  for (int t = 0; t < 200; ++t) {
    const Measure mu = random_any(rng, Domain::RealLine);
    const Measure nu = random_any(rng, Domain::RealLine);
    const auto range = monotone_range(mu, nu);
    EXPECT_TRUE(range.contains(0.0));
    EXPECT_TRUE(range.contains(1.0));
    // Interior points of the range give valid measures.
    if (range.hi) {
      EXPECT_NO_THROW(geodesic_point(mu, nu, *range.hi * (1.0 - 1e-9)));
    }
    if (range.lo) {
      EXPECT_NO_THROW(geodesic_point(mu, nu, *range.lo * (1.0 - 1e-9)));
    }
  }
}
