//------------------------------------------------------------------------------
//
//   Copyright 2026 The conefix Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>

#include "conefix/cone.hpp"
#include "conefix/cone_metric_space.hpp"
#include "conefix/errors.hpp"
#include "conefix/norm.hpp"
#include "conefix/sampling.hpp"

using namespace conefix;

namespace {

EVector random_vector(SampleStream &rng, std::size_t dim, double lo = -1, double hi = 1)
{
  EVector v(dim);
  for (std::size_t i = 0; i < dim; ++i)
  {
    v[i] = rng.uniform(lo, hi);
  }
  return v;
}

}  // namespace

TEST(EVector, RejectsNonFiniteCoordinates)
{
  EXPECT_THROW(EVector({Real(1), std::numeric_limits<Real>::quiet_NaN()}), PreconditionError);
  EXPECT_THROW(EVector({std::numeric_limits<Real>::infinity()}), PreconditionError);
}

TEST(EVector, ArithmeticIsCoordinatewise)
{
  EVector x{1, 2, 3};
  EVector y{4, 5, 6};
  EXPECT_EQ(x + y, (EVector{5, 7, 9}));
  EXPECT_EQ(y - x, (EVector{3, 3, 3}));
  EXPECT_EQ(x * Real(2), (EVector{2, 4, 6}));
  EXPECT_EQ(-x, (EVector{-1, -2, -3}));
  EXPECT_EQ((EVector{-4, 2}).max_abs(), Real(4));
  EXPECT_EQ((EVector{-4, 2}).min_coord(), Real(-4));
  EXPECT_THROW(x + EVector{1}, DimensionMismatch);
}

TEST(Cone, OrthantMembershipHonoursTolerance)
{
  auto cone = Cone::orthant(2);
  EXPECT_TRUE(cone.contains(EVector{0, 0}));
  EXPECT_TRUE(cone.contains(EVector{-1e-13, 3}));
  EXPECT_FALSE(cone.contains(EVector{-1e-11, 3}));
  EXPECT_THROW(cone.contains(EVector{1, 2, 3}), DimensionMismatch);
}

TEST(Cone, InteriorOrderExamples)
{
  auto cone = Cone::orthant(2);
  EXPECT_TRUE(order_ll(cone, EVector{0, 0}, EVector{1, 1}));
  EXPECT_FALSE(order_ll(cone, EVector{0, 0}, EVector{1, 0}));
  EXPECT_FALSE(order_ll(cone, EVector{0, 0}, EVector{0, 0}));
  EXPECT_TRUE(order_leq(cone, EVector{0, 0}, EVector{1, 0}));
  EXPECT_THROW(order_leq(cone, EVector{0}, EVector{1, 0}), DimensionMismatch);
}

TEST(Cone, OrderIsAPartialOrderCompatibleWithTheVectorSpace)
{
  auto         cone = Cone::orthant(3);
  SampleStream rng(7);
  for (int trial = 0; trial < 500; ++trial)
  {
    auto x = random_vector(rng, 3);
    auto p = random_vector(rng, 3, 0, 1);
    auto q = random_vector(rng, 3, 0, 1);
    auto z = random_vector(rng, 3);
    auto y = x + p;
    auto w = y + q;
    Real s = rng.uniform(0, 5);

    EXPECT_TRUE(order_leq(cone, x, x));
    EXPECT_TRUE(order_leq(cone, x, y));
    EXPECT_TRUE(order_leq(cone, x, w)) << "transitivity";
    EXPECT_TRUE(order_leq(cone, x + z, y + z)) << "translation";
    EXPECT_TRUE(order_leq(cone, x * s, y * s)) << "positive scaling";
    if (order_leq(cone, y, x))
    {
      EXPECT_LE(to_double((y - x).max_abs()), 1e-12) << "antisymmetry";
    }
    if (order_ll(cone, x, y))
    {
      EXPECT_TRUE(order_leq(cone, x, y));
    }
  }
}

TEST(Norm, ClosedForms)
{
  EVector v{3, -4};
  EXPECT_EQ(NormSpec::sup()(v), Real(4));
  EXPECT_EQ(NormSpec::euclidean()(v), Real(5));
  // max|x| + 2 * max |x_{i+1} - x_i|
  auto weighted = NormSpec::sup_plus_weighted({2});
  EXPECT_EQ(weighted(v), Real(4 + 2 * 7));
  auto fd = NormSpec::finite_difference(3, 0, 1);
  ASSERT_EQ(fd.weights().size(), 2u);
  EXPECT_EQ(fd.weights()[0], Real(2));
}

TEST(NormalConstant, MonotoneNormsGiveOne)
{
  EXPECT_NEAR(to_double(estimate_normal_constant(Cone::orthant(2), NormSpec::sup(), 2000, 42)), 1.0, 1e-12);
  EXPECT_NEAR(to_double(estimate_normal_constant(Cone::orthant(2), NormSpec::euclidean(), 2000, 42)), 1.0, 1e-12);
}

TEST(NormalConstant, MatchesDenseGridOracleForWeightedNorm)
{
  const auto norm = NormSpec::finite_difference(3, 0, 1);

  // Oracle: every comparable pair 0 <= x <= y on {0, 0.1, ..., 1}^3.
  double oracle = 1;
  auto   grid   = PointDomain::box({0, 0, 0}, {1, 1, 1}).grid(11);
  for (const auto &y : grid)
  {
    EVector yv(y.coords());
    Real    ny = norm(yv);
    if (ny == 0)
    {
      continue;
    }
    for (const auto &x : grid)
    {
      if (x[0] <= y[0] && x[1] <= y[1] && x[2] <= y[2])
      {
        oracle = std::max(oracle, to_double(norm(EVector(x.coords())) / ny));
      }
    }
  }
  EXPECT_NEAR(oracle, 3.0, 1e-12);

  const double estimate = to_double(estimate_normal_constant(Cone::orthant(3), norm, 2000, 42));
  EXPECT_GE(estimate, 1.0);
  EXPECT_NEAR(estimate, oracle, 1e-12);
}

TEST(NormalConstant, NeverDecreasesWithMoreSamples)
{
  const auto norm = NormSpec::finite_difference(6, 0, 1);
  Real       prev = 0;
  for (std::size_t n : {1u, 5u, 20u, 100u, 500u})
  {
    Real k = estimate_normal_constant(Cone::orthant(6), norm, n, 3);
    EXPECT_GE(k, prev);
    prev = k;
  }
}

TEST(PointDomain, GridAndMembership)
{
  auto box  = PointDomain::box({0, -1}, {1, 1});
  auto grid = box.grid(3);
  ASSERT_EQ(grid.size(), 9u);
  EXPECT_EQ(grid[1], Point(std::vector<Real>{0, 0}));  // last axis fastest
  EXPECT_TRUE(box.contains(Point(std::vector<Real>{1 + 1e-13, -1})));
  EXPECT_FALSE(box.contains(Point(std::vector<Real>{1.1, 0})));
  EXPECT_EQ(PointDomain::interval(0, 2).grid(1).front(), Point(1));
}

TEST(Axioms, PairMetricPasses)
{
  auto space  = scaled_pair_space("pair", PointDomain::interval(0, 1), Real(2));
  auto report = check_metric_axioms(space, 1000, 42);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.samples_used, 1000u);
}

TEST(Axioms, ExpWeightedMetricPasses)
{
  auto space = exp_weighted_space("exp", PointDomain::interval(0, 1));
  EXPECT_EQ(space.e_dim(), kExpGridPoints);
  EXPECT_TRUE(check_metric_axioms(space, 1000, 42).all_passed());
}

TEST(Axioms, SignedDifferenceFailsPositivity)
{
  ConeMetricSpace signed_space("signed", PointDomain::interval(0, 1), Cone::orthant(1),
                               [](const Point &x, const Point &y) { return EVector{x.value() - y.value()}; });
  auto report = check_metric_axioms(signed_space, 1000, 42);
  EXPECT_FALSE(report.positivity.passed);
  ASSERT_EQ(report.positivity.witness.size(), 2u);
  EXPECT_LT(report.positivity.witness[0].value(), report.positivity.witness[1].value());
}

TEST(Axioms, SquaredDistanceFailsTriangle)
{
  ConeMetricSpace squared("squared", PointDomain::interval(0, 2), Cone::orthant(1),
                          [](const Point &x, const Point &y) {
                            Real d = x.value() - y.value();
                            return EVector{d * d};
                          });
  auto report = check_metric_axioms(squared, 1000, 42);
  EXPECT_TRUE(report.positivity.passed);
  EXPECT_TRUE(report.symmetry.passed);
  ASSERT_FALSE(report.triangle.passed);
  const auto &w = report.triangle.witness;
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Point(0));
  EXPECT_EQ(w[1], Point(2));
  EXPECT_EQ(w[2], Point(1));
  EXPECT_NEAR(to_double(report.triangle.worst_violation), 2.0, 1e-12);  // 4 - (1 + 1)
}

TEST(Axioms, SeededRunsRepeat)
{
  auto space = exp_weighted_space("exp", PointDomain::interval(0, 1));
  auto r1    = check_metric_axioms(space, 300, 9);
  auto r2    = check_metric_axioms(space, 300, 9);
  EXPECT_EQ(r1.triangle.worst_violation, r2.triangle.worst_violation);
  EXPECT_EQ(r1.samples_used, r2.samples_used);
}
