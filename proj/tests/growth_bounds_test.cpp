#include <gtest/gtest.h>

#include <cmath>

#include "fta/growth_bounds.hpp"
#include "oracles.hpp"

namespace fta {
namespace {

using testing::Random;

const Polynomial kWorked{1.0, Complex{0, 1}, 3.0};

TEST(GrowthCertificate, WorkedExample) {
  // A = 1, n = 2, |an| = 3: threshold max(1, 2*1*2/3), enclosure max(4/3, 2*1/3).
  const GrowthCertificate c = growth_certificate(kWorked);
  EXPECT_EQ(c.deg, 2u);
  EXPECT_EQ(c.lead_norm, 3.0);
  EXPECT_EQ(c.sub_max, 1.0);
  EXPECT_NEAR(c.threshold_radius, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.enclosure_radius, 4.0 / 3.0, 1e-15);
}

TEST(GrowthCertificate, PureSquare) {
  const GrowthCertificate c = growth_certificate(Polynomial{0.0, 0.0, 1.0});
  EXPECT_EQ(c.sub_max, 0.0);
  EXPECT_EQ(c.threshold_radius, 1.0);
  EXPECT_EQ(c.enclosure_radius, 1.0);
}

TEST(GrowthCertificate, Linear) {
  const GrowthCertificate c = growth_certificate(Polynomial{10.0, 1.0});
  EXPECT_EQ(c.threshold_radius, 20.0);
  EXPECT_EQ(c.enclosure_radius, 20.0);
}

TEST(GrowthCertificate, IgnoresTrailingZeros) {
  const GrowthCertificate c = growth_certificate(Polynomial{1.0, Complex{0, 1}, 3.0, 0.0});
  EXPECT_EQ(c.deg, 2u);
  EXPECT_NEAR(c.threshold_radius, 4.0 / 3.0, 1e-15);
}

TEST(GrowthCertificate, RejectsConstants) {
  for (const Polynomial& p : {Polynomial{}, Polynomial{0.0}, Polynomial{7.0, 0.0}}) {
    try {
      growth_certificate(p);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotApplicableToConstant);
    }
  }
}

TEST(GrowthCertificate, InvariantsOnRandomPolynomials) {
  Random rng(10);
  for (int t = 0; t < 500; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 10));
    const GrowthCertificate c = growth_certificate(p);
    EXPECT_GE(c.threshold_radius, 1.0);
    EXPECT_GE(c.threshold_radius, 2.0 * c.sub_max * double(c.deg) / c.lead_norm);
    EXPECT_GE(c.enclosure_radius, c.threshold_radius);
    EXPECT_GE(c.enclosure_radius, 2.0 * norm(p[0]) / c.lead_norm);
  }
}

TEST(CheckBounds, PureSquareIsExactInTheMiddle) {
  const Polynomial p{0.0, 0.0, 1.0};
  const GrowthCertificate c = growth_certificate(p);
  const Complex z{1.5, -2.0};
  const BoundsCheck b = check_bounds(p, z, c);
  EXPECT_DOUBLE_EQ(b.value, 6.25);
  EXPECT_DOUBLE_EQ(b.lower, 0.5 * 6.25);
  EXPECT_DOUBLE_EQ(b.upper, 1.5 * 6.25);
  EXPECT_TRUE(b.holds());
}

TEST(CheckBounds, WorkedExampleAtTwo) {
  // p(2) = 1 + 2i + 12
  const BoundsCheck b = check_bounds(kWorked, 2.0, growth_certificate(kWorked));
  EXPECT_NEAR(b.value, std::sqrt(173.0), 1e-13);
  EXPECT_NEAR(b.value, 13.1529, 1e-4);
  EXPECT_DOUBLE_EQ(b.lower, 6.0);
  EXPECT_DOUBLE_EQ(b.upper, 18.0);
  EXPECT_TRUE(b.holds());
}

TEST(CheckBounds, JustAboveThreshold) {
  const BoundsCheck b = check_bounds(kWorked, 1.34, growth_certificate(kWorked));
  EXPECT_TRUE(b.holds());
  EXPECT_NEAR(b.value, std::abs(testing::power_sum(kWorked, 1.34)), 1e-13);
}

TEST(CheckBounds, BelowThresholdIsRejected) {
  try {
    check_bounds(kWorked, 1.3, growth_certificate(kWorked));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BelowThreshold);
  }
}

TEST(CheckBounds, SandwichOnRandomSamples) {
  Random rng(11);
  for (int t = 0; t < 10000; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 10));
    const GrowthCertificate c = growth_certificate(p);
    const Complex z = rng.annulus(c.threshold_radius, 10 * c.threshold_radius);
    const BoundsCheck b = check_bounds(p, z, c);
    // Independent evaluation of the middle term.
    ASSERT_NEAR(b.value, testing::norm_oracle(p, z), 1e-10 * b.value);
    ASSERT_TRUE(b.holds(1e-9)) << b.lower << " " << b.value << " " << b.upper;
  }
}

TEST(Enclosure, SquaresFromCertificate) {
  const SquareRegion w = minimum_enclosing_square(kWorked);
  EXPECT_NEAR(w.corner().re, -4.0 / 3.0, 1e-15);
  EXPECT_NEAR(w.corner().im, -4.0 / 3.0, 1e-15);
  EXPECT_NEAR(w.side(), 8.0 / 3.0, 1e-15);

  const SquareRegion sq = minimum_enclosing_square(Polynomial{0.0, 0.0, 1.0});
  EXPECT_EQ(sq.corner(), (Complex{-1, -1}));
  EXPECT_EQ(sq.side(), 2.0);

  const SquareRegion lin = minimum_enclosing_square(Polynomial{10.0, 1.0});
  EXPECT_EQ(lin.corner(), (Complex{-20, -20}));
  EXPECT_EQ(lin.side(), 40.0);
  EXPECT_TRUE(lin.contains(-10.0));
}

TEST(Enclosure, OutsideDominatesOrigin) {
  Random rng(12);
  for (int t = 0; t < 10000; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 10));
    const GrowthCertificate c = growth_certificate(p);
    const Complex z = rng.annulus(c.enclosure_radius, 10 * c.enclosure_radius);
    const double at_origin = norm(p[0]);
    ASSERT_GE(testing::norm_oracle(p, z), at_origin - 1e-9 * (1 + at_origin));
  }
}

}  // namespace
}  // namespace fta
