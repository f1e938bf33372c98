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

#include "conefix/certify.hpp"
#include "conefix/errors.hpp"
#include "conefix/fit.hpp"
#include "conefix/sampling.hpp"
#include "oracles.hpp"

using namespace conefix;

namespace {

constexpr std::size_t   kSamples = 2000;
constexpr std::uint64_t kSeed    = 42;

const MappingPair &specimen(const char *label)
{
  return find_entry(label)->pair;
}

// S = sqrt and T = ln over [1/4, 1], so that the pair (1, 1/4) is admissible.
MappingPair wide_log_root()
{
  return MappingPair("E2-wide", exp_weighted_space("E2-wide", PointDomain::interval(0.25, 1)),
                     [](const Point &x) { return Point(sqrt(x.value())); },
                     [](const Point &x) { return Point(log(x.value())); }, DeclaredProperties{},
                     PointDomain::interval(log(Real(0.25)), 0));
}

// d(u, v) = |u - v| only when both lie in [1/2, 1], zero otherwise. Not a
// metric; it produces constraint coordinates with A = B = 0 < L.
MappingPair degenerate_pair()
{
  ConeMetricSpace space("degenerate", PointDomain::interval(0, 1), Cone::orthant(1),
                        [](const Point &u, const Point &v) {
                          bool upper = u.value() >= 0.5 && v.value() >= 0.5;
                          return EVector{upper ? abs(u.value() - v.value()) : Real(0)};
                        });
  return MappingPair("degenerate", space, [](const Point &x) { return Point(x.value() / 2 + 0.5); },
                     [](const Point &x) { return x; }, DeclaredProperties{});
}

}  // namespace

TEST(Constraints, LogRootPairHasClosedFormTerms)
{
  auto        c = evaluate_constraint(wide_log_root(), 1.0, 0.25);
  const auto  w = oracle::exp_weights(kExpGridPoints);
  const Real  ln4 = log(Real(4));
  ASSERT_EQ(c.lhs.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    EXPECT_NEAR(to_double(c.lhs[i]) / w[i], to_double(ln4 / 2), 1e-14);
    EXPECT_NEAR(to_double(c.a_term[i]) / w[i], to_double(ln4), 1e-14);
    EXPECT_NEAR(to_double(c.b_term[i]) / w[i], to_double(ln4 / 2), 1e-14);
  }
}

TEST(Constraints, IdentitySMakesLEqualA)
{
  auto set = build_constraints(specimen("E3"), 500, kSeed);
  ASSERT_FALSE(set.constraints.empty());
  for (const auto &c : set.constraints)
  {
    EXPECT_EQ(c.lhs, c.a_term);
    EXPECT_EQ(c.b_term.max_abs(), Real(0));
  }
}

TEST(Constraints, ScaledRootPairPerUnitTerms)
{
  auto       c = evaluate_constraint(specimen("E1"), 0.0, 0.01);
  const auto w = oracle::exp_weights(kExpGridPoints);
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    EXPECT_NEAR(to_double(c.lhs[i]) / w[i], 0.2, 1e-15);
    EXPECT_NEAR(to_double(c.a_term[i]) / w[i], 0.02, 1e-15);
    EXPECT_NEAR(to_double(c.b_term[i]) / w[i], 0.18, 1e-15);
  }
}

TEST(Constraints, SampleIsCanonicalAndReachesNearCoincidentPairs)
{
  auto set = build_constraints(specimen("E2"), kSamples, kSeed);
  EXPECT_EQ(set.pairs_sampled, kSamples);
  EXPECT_LE(set.constraints.size(), kSamples);
  Real closest = 1;
  for (std::size_t i = 0; i < set.constraints.size(); ++i)
  {
    const auto &c = set.constraints[i];
    EXPECT_NE(c.x, c.y);
    closest = std::min(closest, point_distance(c.x, c.y));
    if (i > 0)
    {
      const auto &p = set.constraints[i - 1];
      EXPECT_LE(std::tie(p.x, p.y), std::tie(c.x, c.y));
    }
  }
  EXPECT_LE(to_double(closest), 1e-6 * (1 + 1e-9));

  auto again = build_constraints(specimen("E2"), kSamples, kSeed);
  ASSERT_EQ(again.constraints.size(), set.constraints.size());
  for (std::size_t i = 0; i < set.constraints.size(); ++i)
  {
    EXPECT_EQ(again.constraints[i].lhs, set.constraints[i].lhs);
  }
}

TEST(Certify, LogRootSatisfiesHalfZero)
{
  auto cert = certify(specimen("E2"), 0.5, 0, kSamples, kSeed);
  EXPECT_EQ(cert.status, CertificateStatus::Satisfied);
  EXPECT_LE(to_double(cert.worst_residual), 1e-12);
  EXPECT_TRUE(cert.witnesses.empty());
  EXPECT_EQ(cert.samples_used, kSamples);
}

TEST(Certify, ScaledRootViolatesNearTheOrigin)
{
  auto cert = certify(specimen("E1"), 0.5, 0.2, kSamples, kSeed);
  ASSERT_EQ(cert.status, CertificateStatus::Violated);
  ASSERT_FALSE(cert.witnesses.empty());
  EXPECT_LE(cert.witnesses.size(), kMaxWitnesses);
  EXPECT_EQ(cert.witnesses.front().x, Point(0));
  EXPECT_LT(to_double(cert.witnesses.front().y.value()), 0.05);
  for (std::size_t i = 1; i < cert.witnesses.size(); ++i)
  {
    EXPECT_GE(cert.witnesses[i - 1].residual, cert.witnesses[i].residual);
  }

  // 0.2 - (0.5 * 0.02 + 0.2 * 0.18) per unit of e^t
  auto       c   = evaluate_constraint(specimen("E1"), 0.0, 0.01);
  auto       res = constraint_residual(c, 0.5, 0.2);
  const auto w   = oracle::exp_weights(kExpGridPoints);
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    EXPECT_NEAR(to_double(res[i]) / w[i], 0.154, 1e-9);
  }
}

TEST(Certify, IdentitySRejectsABelowOne)
{
  EXPECT_EQ(certify(specimen("E3"), 0.99, 0, kSamples, kSeed).status, CertificateStatus::Violated);
  EXPECT_EQ(certify(specimen("E3"), 1.0, 0, kSamples, kSeed).status, CertificateStatus::Satisfied);
}

TEST(Certify, NegativeConstantsAreRejected)
{
  EXPECT_THROW(certify(specimen("E2"), -0.1, 0, 10, kSeed), PreconditionError);
  EXPECT_THROW(certify(specimen("E2"), 0, -0.1, 10, kSeed), PreconditionError);
}

TEST(Certify, ScaledRootViolatesEveryGridConstantBelowTheGate)
{
  auto set = build_constraints(specimen("E1"), kSamples, kSeed);
  for (int ia = 0; ia < 20; ++ia)
  {
    for (int ib = 0; ib < 20; ++ib)
    {
      Real a = Real(ia) / 20;
      Real b = Real(ib) / 20;
      if (a + 2 * b < 1)
      {
        EXPECT_EQ(certify(set, a, b).status, CertificateStatus::Violated) << to_double(a) << "," << to_double(b);
      }
    }
  }
}

TEST(Certify, EnlargingConstantsNeverBreaksMembership)
{
  SampleStream rng(5);
  for (const auto &e : corpus())
  {
    auto set = build_constraints(e.pair, 500, kSeed);
    for (int i = 0; i < 30; ++i)
    {
      Real a  = rng.uniform(0, 1.2);
      Real b  = rng.uniform(0, 1.2);
      Real a2 = a + rng.uniform(0, 0.5);
      Real b2 = b + rng.uniform(0, 0.5);
      if (certify(set, a, b).status == CertificateStatus::Satisfied)
      {
        EXPECT_EQ(certify(set, a2, b2).status, CertificateStatus::Satisfied) << e.pair.label();
      }
    }
  }
}

TEST(Certify, DegenerateCoordinateIsAlwaysViolated)
{
  auto pair = degenerate_pair();
  auto set  = build_constraints(pair, 200, kSeed);
  bool any  = false;
  for (const auto &c : set.constraints)
  {
    any = any || c.infeasible();
  }
  EXPECT_TRUE(any);
  EXPECT_EQ(certify(set, 100, 100).status, CertificateStatus::Violated);
}

TEST(Fit, ClosedFormMinimisers)
{
  struct Case
  {
    const char *label;
    double      a;
    double      b;
    double      objective;
  };
  for (const auto &c : {Case{"E2", 0.5, 0, 0.5}, Case{"E3", 1, 0, 1}, Case{"C-Banach", 0.5, 0, 0.5},
                        Case{"C-R2", 0.5, 0, 0.5}})
  {
    auto fit = fit_min_ab(specimen(c.label), kSamples, kSeed);
    ASSERT_TRUE(fit.feasible) << c.label;
    EXPECT_NEAR(to_double(fit.argmin.a), c.a, 1e-6) << c.label;
    EXPECT_NEAR(to_double(fit.argmin.b), c.b, 1e-6) << c.label;
    EXPECT_NEAR(to_double(fit.objective), c.objective, 1e-6) << c.label;
    EXPECT_FALSE(fit.active_constraints.empty()) << c.label;
  }
}

TEST(Fit, ArgminSatisfiesItsOwnConstraints)
{
  for (const auto &e : corpus())
  {
    auto set = build_constraints(e.pair, kSamples, kSeed);
    auto fit = fit_min_ab(set);
    ASSERT_TRUE(fit.feasible) << e.pair.label();
    EXPECT_GE(fit.argmin.a, Real(0));
    EXPECT_GE(fit.argmin.b, Real(0));
    EXPECT_EQ(certify(set, fit.argmin.a, fit.argmin.b).status, CertificateStatus::Satisfied) << e.pair.label();
  }
}

TEST(Fit, ArgminHoldsOnAFreshLargerSample)
{
  for (const char *label : {"E2", "E3", "C-Banach"})
  {
    auto fit  = fit_min_ab(specimen(label), kSamples, kSeed);
    auto cert = certify(specimen(label), fit.argmin.a, fit.argmin.b, 10 * kSamples, kSeed + 1);
    EXPECT_EQ(cert.status, CertificateStatus::Satisfied) << label;
    EXPECT_LE(to_double(cert.worst_residual), 1e-6) << label;
  }
}

TEST(Fit, AgreesWithGridOracleOnEveryEntry)
{
  for (const auto &e : corpus())
  {
    auto set    = build_constraints(e.pair, kSamples, kSeed);
    auto fit    = fit_min_ab(set);
    auto oracle = oracle::grid_fit(set);
    ASSERT_TRUE(oracle.feasible) << e.pair.label();
    EXPECT_NEAR(to_double(fit.objective), oracle.objective, 2e-3) << e.pair.label();
    if (e.expected.min_a_plus_2b)
    {
      EXPECT_NEAR(to_double(fit.objective), to_double(*e.expected.min_a_plus_2b), 1e-3) << e.pair.label();
    }
    if (e.expected.theorem_inapplicable)
    {
      EXPECT_GE(oracle.objective, 1.0) << e.pair.label();
    }
  }
}

TEST(Fit, DegenerateCoordinateMakesTheFitInfeasible)
{
  auto fit = fit_min_ab(degenerate_pair(), 200, kSeed);
  EXPECT_FALSE(fit.feasible);
  EXPECT_FALSE(is_finite(fit.objective));
  ASSERT_EQ(fit.active_constraints.size(), 1u);
  EXPECT_TRUE(fit.active_constraints.front().infeasible());
}

TEST(Fit, SameSeedSameAnswer)
{
  auto f1 = fit_min_ab(specimen("C-Kannan"), kSamples, kSeed);
  auto f2 = fit_min_ab(specimen("C-Kannan"), kSamples, kSeed);
  EXPECT_EQ(f1.argmin, f2.argmin);
  EXPECT_EQ(f1.objective, f2.objective);
}
