#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fta/evt_grid.hpp"
#include "fta/growth_bounds.hpp"
#include "oracles.hpp"

namespace fta {
namespace {

using testing::Random;

const Polynomial kWorked{1.0, Complex{0, 1}, 3.0};
const SquareRegion kUnitBox(Complex{-1, -1}, 2.0);

SquareRegion random_region(Random& rng) {
  return SquareRegion(rng.box(1.5), rng.uniform(0.05, 2.0));
}

TEST(SquareRegion, RejectsDegenerateSide) {
  for (double side : {0.0, -1.0, std::nan("")}) {
    try {
      SquareRegion(Complex{}, side);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
  }
}

TEST(SquareRegion, ContainsIsClosed) {
  const SquareRegion r(Complex{1, 2}, 0.5);
  EXPECT_TRUE(r.contains({1, 2}));
  EXPECT_TRUE(r.contains({1.5, 2.5}));
  EXPECT_FALSE(r.contains({1.5000001, 2.2}));
}

TEST(LipschitzBound, Examples) {
  EXPECT_DOUBLE_EQ(lipschitz_bound(Polynomial{0.0, 0.0, 1.0}, kUnitBox), 2.0 * std::numbers::sqrt2);
  EXPECT_EQ(lipschitz_bound(Polynomial{7.0}, kUnitBox), 0.0);
  EXPECT_DOUBLE_EQ(lipschitz_bound(kWorked, SquareRegion(Complex{-2, -2}, 4.0)),
                   1.0 + 6.0 * 2.0 * std::numbers::sqrt2);
}

TEST(LipschitzBound, BoundsDifferenceQuotients) {
  Random rng(20);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 6));
    const SquareRegion r = random_region(rng);
    const double lip = lipschitz_bound(p, r);
    for (int k = 0; k < 50; ++k) {
      const Complex u{r.corner().re + rng.uniform(0, r.side()), r.corner().im + rng.uniform(0, r.side())};
      const Complex v{r.corner().re + rng.uniform(0, r.side()), r.corner().im + rng.uniform(0, r.side())};
      ASSERT_LE(std::abs(testing::norm_oracle(p, u) - testing::norm_oracle(p, v)),
                lip * norm(u - v) + 1e-12);
    }
  }
}

TEST(GridMin, RootOnGridPoint) {
  const Polynomial p{Complex{-0.5, -0.5}, 1.0};
  const CertifiedMinimum m = grid_min(p, SquareRegion(Complex{}, 1.0), 2);
  EXPECT_EQ(m.argmin, (Complex{0.5, 0.5}));
  EXPECT_EQ(m.value, 0.0);
  EXPECT_DOUBLE_EQ(m.gap, std::numbers::sqrt2 / 2 * 0.5);
  EXPECT_EQ(m.evaluations, 9u);
}

TEST(GridMin, Constant) {
  const CertifiedMinimum m = grid_min(Polynomial{7.0}, SquareRegion(Complex{3, -4}, 0.25), 5);
  EXPECT_EQ(m.value, 7.0);
  EXPECT_EQ(m.gap, 0.0);
  EXPECT_EQ(m.argmin, (Complex{3, -4}));  // first row-major index wins ties
}

TEST(GridMin, WorkedExampleAgainstDenseOracle) {
  const SquareRegion sq = minimum_enclosing_square(kWorked);
  const CertifiedMinimum m = grid_min(kWorked, sq, 64);
  const double oracle = testing::dense_min(kWorked, sq, 1024);
  EXPECT_LE(m.value - m.gap, oracle + 1e-12);
  EXPECT_GE(m.value, oracle - 1e-12);
  EXPECT_TRUE(sq.contains(m.argmin));
}

TEST(GridMin, NestedGridsNeverGetWorse) {
  Random rng(21);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 6));
    const SquareRegion r = random_region(rng);
    double prev = grid_min(p, r, 3).value;
    for (std::size_t n = 6; n <= 96; n *= 2) {
      const double v = grid_min(p, r, n).value;
      ASSERT_LE(v, prev + 1e-12);
      prev = v;
    }
  }
}

TEST(GridMin, RejectsZeroResolution) {
  EXPECT_THROW(grid_min(kWorked, kUnitBox, 0), Error);
}

TEST(CertifiedMin, PureSquare) {
  const CertifiedMinimum m = certified_min(Polynomial{0.0, 0.0, 1.0}, kUnitBox, 1e-6, 1000000);
  EXPECT_LE(m.value, 1e-6);
  EXPECT_LE(norm(m.argmin), 1e-3);
  EXPECT_LE(m.gap, 1e-6);
  EXPECT_FALSE(m.budget_exhausted);
}

TEST(CertifiedMin, FindsRootOfWorkedExample) {
  const SquareRegion sq = minimum_enclosing_square(kWorked);
  const CertifiedMinimum m = certified_min(kWorked, sq, 1e-4, 1000000);
  EXPECT_LE(m.gap, 1e-4);
  EXPECT_LE(m.value, 1e-4);  // a root lies inside the enclosure
  EXPECT_TRUE(sq.contains(m.argmin));
  // Near one of i(-1 +- sqrt 13)/6.
  const auto [r1, r2] = testing::quadratic_roots(1.0, {0, 1}, 3.0);
  const auto z = testing::to_std(m.argmin);
  EXPECT_LT(std::min(std::abs(z - r1), std::abs(z - r2)), 1e-3);
}

TEST(CertifiedMin, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(certified_min(kWorked, kUnitBox, 0.0, 100), Error);
}

TEST(CertifiedMin, BudgetExhaustionKeepsAValidGap) {
  Random rng(22);
  for (int t = 0; t < 20; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(2, 6));
    const SquareRegion r = random_region(rng);
    const CertifiedMinimum m = certified_min(p, r, 1e-14, 40);
    EXPECT_TRUE(m.budget_exhausted);
    EXPECT_LE(m.cells, 40u);
    EXPECT_GE(testing::dense_min(p, r, 256), m.value - m.gap - 1e-9);
  }
}

TEST(CertifiedMin, SoundAgainstDenseOracle) {
  Random rng(23);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = rng.polynomial(rng.integer(1, 6));
    const SquareRegion r = random_region(rng);
    const CertifiedMinimum m = certified_min(p, r, 1e-8, 200000);
    const double oracle = testing::dense_min(p, r, 256);
    ASSERT_GE(oracle, m.value - m.gap - 1e-9);
    ASSERT_LE(m.value, oracle + 1e-9);
    ASSERT_TRUE(r.contains(m.argmin));
  }
}

TEST(CertifiedMin, ValueIsMinimalUpToGap) {
  Random rng(24);
  const Polynomial p = rng.polynomial(5);
  const SquareRegion r = random_region(rng);
  const CertifiedMinimum m = certified_min(p, r, 1e-3, 100000);
  for (int k = 0; k < 10000; ++k) {
    const Complex z{r.corner().re + rng.uniform(0, r.side()), r.corner().im + rng.uniform(0, r.side())};
    ASSERT_LE(m.value, testing::norm_oracle(p, z) + m.gap + 1e-12);
  }
}

TEST(CertifiedMin, Deterministic) {
  const SquareRegion sq = minimum_enclosing_square(kWorked);
  const CertifiedMinimum a = certified_min(kWorked, sq, 1e-9, 50000);
  const CertifiedMinimum b = certified_min(kWorked, sq, 1e-9, 50000);
  EXPECT_EQ(a.argmin, b.argmin);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.gap, b.gap);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(CertifiedMin, GenericObjectiveWithGlobalLipschitz) {
  // |z - c| + 0.3 is 1-Lipschitz with minimum 0.3 at c.
  const Complex c{0.3, -0.2};
  auto f = [c](const Complex& z) { return norm(z - c) + 0.3; };
  const CertifiedMinimum m = certified_min(f, 1.0, kUnitBox, 1e-7, 1000000);
  EXPECT_LE(m.gap, 1e-7);
  EXPECT_NEAR(m.value, 0.3, 1e-7);
  EXPECT_LT(norm(m.argmin - c), 1e-6);

  const CertifiedMinimum g = grid_min(f, 1.0, kUnitBox, 10);
  EXPECT_GE(g.value, 0.3);
  EXPECT_LE(g.value - g.gap, 0.3 + 1e-15);
}

TEST(CertifiedMin, GenericObjectiveMayBeNegative) {
  auto f = [](const Complex& z) { return z.re + z.im; };  // min -2 at the lower-left corner
  const CertifiedMinimum m = certified_min(f, std::numbers::sqrt2, kUnitBox, 1e-9, 1000000);
  EXPECT_EQ(m.value, -2.0);
  EXPECT_EQ(m.argmin, (Complex{-1, -1}));
}

}  // namespace
}  // namespace fta
