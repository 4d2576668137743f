#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "wass1d/error.hpp"
#include "wass1d/metric.hpp"
#include "wass1d/random.hpp"

using namespace wass1d;
using namespace wass1d::testing;

// --- construction -----------------------------------------------------------

TEST(FromAtoms, SymmetricTwoPoint) {
  const Measure mu = real_atoms({{0.0, 0.5}, {1.0, 0.5}});
  EXPECT_EQ(mu.quantile(0.25), 0.0);
  EXPECT_EQ(mu.quantile(0.75), 1.0);
  ASSERT_EQ(mu.breaks().size(), 3u);
  EXPECT_EQ(mu.breaks()[1], 0.5);
}

TEST(FromAtoms, DiracIsConstantQuantile) {
  const Measure mu = real_atoms({{3.0, 1.0}});
  EXPECT_EQ(mu.segments().size(), 1u);
  EXPECT_EQ(mu.quantile(0.1), 3.0);
  EXPECT_TRUE(mu.is_dirac());
}

TEST(FromAtoms, MergesEqualPositions) {
  const auto d = DiscreteMeasure::from_atoms(Domain::RealLine, {{1.0, 0.25}, {1.0, 0.25}, {0.0, 0.5}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0], (Atom{0.0, 0.5}));
  EXPECT_EQ(d.atoms()[1], (Atom{1.0, 0.5}));
}

TEST(FromAtoms, RenormalizesWithinTolerance) {
  const auto d = DiscreteMeasure::from_atoms(Domain::RealLine, {{0.0, 0.5 + 4e-10}, {1.0, 0.5}});
  EXPECT_NEAR(d.atoms()[0].weight + d.atoms()[1].weight, 1.0, 1e-15);
}

TEST(FromAtoms, Errors) {
  EXPECT_EQ(code_of([] { real_atoms({{0.0, 0.0}, {1.0, 1.0}}); }), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(code_of([] { real_atoms({{0.0, -0.5}, {1.0, 1.5}}); }), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(code_of([] { real_atoms({{0.0, 0.5}, {1.0, 0.6}}); }), ErrorCode::WeightSumOutOfTolerance);
  EXPECT_EQ(code_of([] { unit_atoms({{1.5, 1.0}}); }), ErrorCode::InvalidMeasure);
  EXPECT_EQ(code_of([] { real_atoms({{NAN, 1.0}}); }), ErrorCode::InvalidMeasure);
}

TEST(FromQuantile, RejectsDecreasingQuantile) {
  EXPECT_EQ(code_of([] {
              Measure::from_pieces(Domain::RealLine, {0.0, 0.5, 1.0}, {{1.0, 0.0}, {0.0, 0.0}});
            }),
            ErrorCode::NotMonotone);
  EXPECT_EQ(code_of([] { Measure::from_pieces(Domain::RealLine, {0.0, 1.0}, {{1.0, -1.0}}); }),
            ErrorCode::InvalidMeasure);
  EXPECT_EQ(code_of([] { Measure::from_pieces(Domain::RealLine, {0.0, 0.5}, {{1.0, 0.0}}); }),
            ErrorCode::InvalidMeasure);
}

// --- evaluation -------------------------------------------------------------

TEST(Quantile, Examples) {
  EXPECT_EQ(real_dirac(3.0).quantile(0.7), 3.0);
  EXPECT_EQ(real_atoms({{0.0, 0.5}, {1.0, 0.5}}).quantile(0.5), 1.0);
  EXPECT_EQ(unit_uniform().quantile(0.25), 0.25);
}

TEST(Quantile, LevelOutOfRange) {
  const Measure mu = unit_uniform();
  EXPECT_EQ(code_of([&] { mu.quantile(0.0); }), ErrorCode::LevelOutOfRange);
  EXPECT_EQ(code_of([&] { mu.quantile(1.0); }), ErrorCode::LevelOutOfRange);
  EXPECT_EQ(code_of([&] { mu.quantile(-0.1); }), ErrorCode::LevelOutOfRange);
  EXPECT_EQ(mu.quantile_left(1.0), 1.0);
}

TEST(Cdf, Examples) {
  EXPECT_EQ(real_dirac(3.0).cdf(3.0), 1.0);
  EXPECT_EQ(real_dirac(3.0).cdf(2.999), 0.0);
  EXPECT_EQ(real_atoms({{0.0, 0.5}, {1.0, 0.5}}).cdf(0.0), 0.5);
  EXPECT_EQ(real_atoms({{0.0, 0.5}, {1.0, 0.5}}).cdf_left(0.0), 0.0);
  EXPECT_EQ(unit_uniform().cdf(0.25), 0.25);
}

TEST(Cdf, FunctionMatchesPointEvaluation) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Measure mu = random_any(rng, Domain::RealLine);
    const PiecewiseLinear f = mu.cdf_function();
    for (int k = 0; k < 20; ++k) {
      const double x = rng.uniform(f.lower(), f.upper());
      EXPECT_NEAR(f(x), mu.cdf(x), 1e-12);
    }
  }
}

TEST(Cdf, GaloisConsistency) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const Measure mu = random_any(rng, t % 2 ? Domain::RealLine : Domain::UnitInterval);
    for (int k = 0; k < 20; ++k) {
      const double y = rng.uniform(0.001, 0.999);
      const double x = rng.uniform(mu.support_min() - 0.5, mu.support_max() + 0.5);
      const double q = mu.quantile(y);
      if (x == q) continue;
      EXPECT_EQ(mu.cdf(x) <= y, x < q) << "x=" << x << " y=" << y;
    }
    for (int k = 0; k < 20; ++k) {
      const double x = rng.uniform(mu.support_min(), mu.support_max());
      const double level = mu.cdf(x);
      if (level <= 0.0 || level >= 1.0) continue;
      EXPECT_GE(mu.quantile(level), x - 1e-12);
    }
  }
}

// --- barycenter, flip, push-forward ----------------------------------------

TEST(Barycenter, Examples) {
  EXPECT_EQ(barycenter(real_dirac(2.5)), 2.5);
  EXPECT_EQ(barycenter(real_atoms({{-1.0, 0.5}, {1.0, 0.5}})), 0.0);
  // Weighted sum of the two atoms of the chart point (0, 1, 1) vanishes.
  EXPECT_NEAR(barycenter(two_point_from_param({0.0, 1.0, 1.0}).to_measure()), 0.0, 1e-15);
  EXPECT_NEAR(barycenter(unit_uniform()), 0.5, 1e-15);
}

TEST(Flip, DiracSplits) {
  EXPECT_EQ(flip(unit_dirac(0.3)), unit_atoms({{0.0, 0.3}, {1.0, 0.7}}));
}

TEST(Flip, UniformIsFixed) { EXPECT_EQ(flip(unit_uniform()), unit_uniform()); }

TEST(Flip, Involution) {
  const Measure mu = unit_atoms({{0.0, 0.2}, {0.4, 0.5}, {1.0, 0.3}});
  EXPECT_EQ(flip(flip(mu)), mu);
  EXPECT_TRUE(approx_same(flip(flip(mu)), mu, 0.0));
}

TEST(Flip, RejectsRealLine) {
  EXPECT_EQ(code_of([] { flip(real_dirac(0.0)); }), ErrorCode::DomainMismatch);
}

TEST(Flip, InvolutionAndIsometryOnRandomMeasures) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const Measure mu = random_any(rng, Domain::UnitInterval);
    const Measure nu = random_any(rng, Domain::UnitInterval);
    EXPECT_LE(wasserstein_distance(flip(flip(mu)), mu, 1.0), 1e-12);
    EXPECT_NEAR(wasserstein_distance(flip(mu), flip(nu), 1.0), wasserstein_distance(mu, nu, 1.0),
                1e-12);
  }
}

TEST(Flip, Bijective) {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const Measure mu = random_discrete(rng, Domain::UnitInterval).to_measure();
    const Measure nu = random_discrete(rng, Domain::UnitInterval).to_measure();
    if (mu == nu) continue;
    EXPECT_FALSE(flip(mu) == flip(nu));
  }
}

TEST(Pushforward, Examples) {
  EXPECT_EQ(pushforward_affine(unit_dirac(0.25), -1, 1.0), unit_dirac(0.75));
  EXPECT_EQ(pushforward_affine(real_atoms({{0.0, 0.5}, {1.0, 0.5}}), 1, 5.0),
            real_atoms({{5.0, 0.5}, {6.0, 0.5}}));
  EXPECT_EQ(pushforward_affine(real_atoms({{0.0, 0.3}, {2.0, 0.7}}), -1, 0.0),
            real_atoms({{-2.0, 0.7}, {0.0, 0.3}}));
}

TEST(Pushforward, IdentityKeepsRepresentation) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const Measure mu = random_any(rng, Domain::RealLine);
    EXPECT_EQ(pushforward_affine(mu, 1, 0.0), mu);
  }
}

TEST(Pushforward, IntervalAllowsOnlyItsIsometries) {
  EXPECT_EQ(code_of([] { pushforward_affine(unit_dirac(0.5), 1, 0.5); }),
            ErrorCode::InvalidIntervalIsometry);
  EXPECT_EQ(code_of([] { pushforward_affine(unit_dirac(0.5), -1, 0.0); }),
            ErrorCode::InvalidIntervalIsometry);
  EXPECT_EQ(code_of([] { pushforward_affine(real_dirac(0.5), 2, 0.0); }),
            ErrorCode::InvalidArgument);
}

// --- two-point chart --------------------------------------------------------

TEST(TwoPoint, Examples) {
  EXPECT_EQ(two_point_from_param({0.0, 1.0, 0.0}),
            DiscreteMeasure::from_atoms(Domain::RealLine, {{-1.0, 0.5}, {1.0, 0.5}}));
  EXPECT_EQ(two_point_from_param({0.0, 0.0, 4.2}),
            DiscreteMeasure::from_atoms(Domain::RealLine, {{0.0, 1.0}}));
}

TEST(TwoPoint, InverseOfQuarterThreeQuarters) {
  // Solving the weight and position equations gives (0, sqrt 3, ln(3)/2).
  const auto mu = DiscreteMeasure::from_atoms(Domain::RealLine, {{-3.0, 0.25}, {1.0, 0.75}});
  const TwoPointParam tp = param_from_two_point(mu);
  EXPECT_NEAR(tp.x, 0.0, 1e-15);
  EXPECT_NEAR(tp.sigma, std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(tp.p, 0.5 * std::log(3.0), 1e-15);
  const auto back = two_point_from_param(tp);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_NEAR(back.atoms()[0].position, -3.0, 1e-14);
  EXPECT_NEAR(back.atoms()[1].position, 1.0, 1e-14);
  EXPECT_NEAR(back.atoms()[0].weight, 0.25, 1e-15);
}

TEST(TwoPoint, RoundTrip) {
  Rng rng(16);
  for (int t = 0; t < 500; ++t) {
    const TwoPointParam tp{rng.uniform(-5.0, 5.0), rng.uniform(0.01, 3.0), rng.uniform(-3.0, 3.0)};
    const TwoPointParam back = param_from_two_point(two_point_from_param(tp));
    EXPECT_NEAR(back.x, tp.x, 1e-12);
    EXPECT_NEAR(back.sigma, tp.sigma, 1e-12);
    EXPECT_NEAR(back.p, tp.p, 1e-12);
  }
}

TEST(TwoPoint, DiracChartPoint) {
  const TwoPointParam tp = param_from_two_point(DiscreteMeasure::from_atoms(Domain::RealLine, {{2.0, 1.0}}));
  EXPECT_EQ(tp.x, 2.0);
  EXPECT_EQ(tp.sigma, 0.0);
  EXPECT_EQ(tp.p, 0.0);
}

TEST(TwoPoint, TooManyAtoms) {
  EXPECT_EQ(code_of([] {
              param_from_two_point(
                  DiscreteMeasure::from_atoms(Domain::RealLine, {{0.0, 0.2}, {1.0, 0.3}, {2.0, 0.5}}));
            }),
            ErrorCode::TooManyAtoms);
}

// --- discrete views ---------------------------------------------------------

TEST(Discrete, AtomExtractionRoundTrip) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const DiscreteMeasure d = random_discrete(rng, Domain::RealLine);
    const Measure mu = d.to_measure();
    EXPECT_TRUE(mu.is_discrete());
    for (const auto& s : mu.segments()) EXPECT_EQ(s.slope, 0.0);
    EXPECT_EQ(DiscreteMeasure::from_atoms(Domain::RealLine, mu.atoms()).to_measure(), mu);
  }
}

TEST(Discrete, NotDiscrete) {
  EXPECT_EQ(code_of([] { unit_uniform().atoms(); }), ErrorCode::NotDiscrete);
  EXPECT_FALSE(unit_uniform().is_discrete());
}

TEST(FromCdf, InvertsCdfFunction) {
  Rng rng(18);
  for (int t = 0; t < 200; ++t) {
    const Measure mu = random_any(rng, Domain::RealLine);
    const Measure back = Measure::from_cdf(Domain::RealLine, mu.cdf_function());
    EXPECT_TRUE(approx_same(back, mu, 1e-9)) << t;
  }
}
