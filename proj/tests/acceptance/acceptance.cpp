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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All tolerances and time limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "conefix/certify.hpp"
#include "conefix/cli/run.hpp"
#include "conefix/fit.hpp"
#include "conefix/fixed_point_checks.hpp"
#include "conefix/picard.hpp"
#include "conefix/sampling.hpp"
#include "oracles.hpp"

using namespace conefix;

namespace {

constexpr std::size_t   kSamples = 2000;
constexpr std::uint64_t kSeed    = 42;

struct Check
{
  bool        ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what)
  {
    if (!cond && ok)
    {
      detail = what;
    }
    ok = ok && cond;
  }
};

struct Criterion
{
  int                    id;
  std::string            name;
  double                 time_limit_s;  // 0: no limit
  std::function<Check()> body;
};

const MappingPair &specimen(const char *label)
{
  return find_entry(label)->pair;
}

std::string str(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Real e_norm(const MappingPair &pair)
{
  return pair.space().norm()(exp_grid(pair.space().e_dim()));
}

Check axioms()
{
  Check c;
  auto  pair_space = scaled_pair_space("pair", PointDomain::interval(0, 1), Real(2));
  auto  exp_space  = exp_weighted_space("exp", PointDomain::interval(0, 1));
  c.expect(check_metric_axioms(pair_space, 1000, kSeed).all_passed(), "pair metric failed an axiom");
  c.expect(check_metric_axioms(exp_space, 1000, kSeed).all_passed(), "e^t metric failed an axiom");

  ConeMetricSpace signed_space("signed", PointDomain::interval(0, 1), Cone::orthant(1),
                               [](const Point &x, const Point &y) { return EVector{x.value() - y.value()}; });
  auto report = check_metric_axioms(signed_space, 1000, kSeed);
  c.expect(!report.positivity.passed, "signed difference passed positivity");
  c.expect(report.positivity.witness.size() == 2 &&
               report.positivity.witness[0].value() < report.positivity.witness[1].value(),
           "positivity witness is not a pair x < y");
  return c;
}

Check membership_positive()
{
  Check c;
  auto  set     = build_constraints(specimen("E2"), kSamples, kSeed);
  Real  closest = 1;
  for (const auto &k : set.constraints)
  {
    closest = std::min(closest, point_distance(k.x, k.y));
  }
  c.expect(closest <= Real(1e-6) * (1 + Real(1e-9)), "no near-coincident pair in the sample");

  auto cert = certify(specimen("E2"), 0.5, 0, kSamples, kSeed);
  c.expect(cert.status == CertificateStatus::Satisfied, "certificate violated");
  c.expect(cert.worst_residual <= Real(1e-12), "worst residual " + str(to_double(cert.worst_residual)));
  c.detail = c.ok ? "worst residual " + str(to_double(cert.worst_residual)) : c.detail;
  return c;
}

Check membership_negative()
{
  Check      c;
  const auto &pair = specimen("E1");
  auto       set  = build_constraints(pair, kSamples, kSeed);

  // pair-grid oracle: S = sqrt, T = 2x evaluated directly, per unit of e^t
  auto residual = [](double x, double y, double a, double b) {
    double l  = 2 * std::abs(std::sqrt(x) - std::sqrt(y));
    double aa = 2 * std::abs(x - y);
    double bb = 2 * (std::abs(x - std::sqrt(x)) + std::abs(y - std::sqrt(y)));
    return l - a * aa - b * bb;
  };

  int cases = 0;
  for (int ia = 0; ia < 20; ++ia)
  {
    for (int ib = 0; ib < 20; ++ib)
    {
      const double a = ia * 0.05;
      const double b = ib * 0.05;
      if (a + 2 * b >= 1 - 1e-12)
      {
        continue;
      }
      ++cases;
      c.expect(certify(set, a, b).status == CertificateStatus::Violated,
               "Satisfied at (" + str(a) + "," + str(b) + ")");
      bool oracle_violated = false;
      for (int i = 0; i <= 100 && !oracle_violated; ++i)
      {
        for (int j = i + 1; j <= 100 && !oracle_violated; ++j)
        {
          oracle_violated = residual(i / 100.0, j / 100.0, a, b) > kOrderTol;
        }
      }
      c.expect(oracle_violated, "oracle found no violation at (" + str(a) + "," + str(b) + ")");
    }
  }

  const double oracle_value = residual(0, 0.01, 0.5, 0.2);
  auto         k            = evaluate_constraint(pair, 0.0, 0.01);
  auto         res          = constraint_residual(k, 0.5, 0.2);
  const auto   w            = oracle::exp_weights(res.size());
  for (std::size_t i = 0; i < res.size(); ++i)
  {
    const double per_unit = to_double(res[i]) / w[i];
    c.expect(std::abs(per_unit - 0.154) <= 1e-9, "per-unit residual " + str(per_unit));
    c.expect(std::abs(per_unit - oracle_value) <= 1e-9, "library and oracle disagree");
  }
  if (c.ok)
  {
    c.detail = std::to_string(cases) + " grid constants violated; witness (0, 0.01) residual 0.154 per unit";
  }
  return c;
}

Check fit_vs_oracle()
{
  Check       c;
  std::string summary;
  for (const char *label : {"E1", "E2", "E3", "C-Banach"})
  {
    auto set    = build_constraints(specimen(label), kSamples, kSeed);
    auto fit    = fit_min_ab(set);
    auto grid   = oracle::grid_fit(set);
    double obj  = fit.feasible ? to_double(fit.objective) : INFINITY;
    c.expect(grid.feasible == fit.feasible, std::string(label) + ": feasibility differs");
    c.expect(std::abs(obj - grid.objective) <= 2e-3,
             std::string(label) + ": LP " + str(obj) + " vs grid " + str(grid.objective));
    summary += std::string(summary.empty() ? "" : ", ") + label + " " + str(obj);
  }
  auto e1 = fit_min_ab(specimen("E1"), kSamples, kSeed);
  c.expect(!e1.feasible || e1.objective >= 1, "E1 admits a+2b < 1");
  auto expect_obj = [&](const char *label, double v) {
    auto f = fit_min_ab(specimen(label), kSamples, kSeed);
    c.expect(std::abs(to_double(f.objective) - v) <= 2e-3, std::string(label) + " objective " +
                                                               str(to_double(f.objective)));
  };
  expect_obj("E2", 0.5);
  expect_obj("E3", 1.0);
  expect_obj("C-Banach", 0.5);
  if (c.ok)
  {
    c.detail = summary;
  }
  return c;
}

Check rate_bound()
{
  Check       c;
  const auto &pair  = specimen("E2");
  auto        r     = picard_solve(pair, 0.5, 0, 0.5, Real(1e-10));
  const auto &steps = r.trace.step_norms;
  c.expect(r.trace.lambda == Real(0.5), "lambda " + str(to_double(r.trace.lambda)));
  c.expect(steps.size() >= 2, "trace too short");
  if (!c.ok)
  {
    return c;
  }
  auto rate = check_rate_bound(r.trace);
  c.expect(rate.passed, "geometric bound broken");
  c.expect(rate.cauchy_passed, "Cauchy tail bound broken");
  for (std::size_t n = 0; n + 1 < steps.size(); ++n)
  {
    const Real q = steps[n + 1] / steps[n];
    c.expect(abs(q - Real(0.5)) <= Real(1e-9), "ratio at " + std::to_string(n) + " = " + str(to_double(q)));
  }
  const Real scale = log(Real(2)) * e_norm(pair);
  for (std::size_t n = 0; n < steps.size(); ++n)
  {
    const Real closed = pow(Real(2), -Real(n + 1)) * scale;
    c.expect(abs(steps[n] - closed) <= Real(1e-12) * closed, "closed form off at step " + std::to_string(n));
    c.expect(steps[n] <= pow(Real(0.5), Real(n)) * steps[0] * (1 + Real(kRateSlack)),
             "step " + std::to_string(n) + " above lambda^n bound");
  }
  if (c.ok)
  {
    c.detail = std::to_string(steps.size()) + " steps, all ratios 0.5";
  }
  return c;
}

Check fixed_point_uniqueness()
{
  Check c;
  auto  report = verify_uniqueness(specimen("E2"), 0.5, 0, {0.5, 0.6, 0.9}, Real(1e-10));
  for (std::size_t i = 0; i < report.results.size(); ++i)
  {
    const auto &r = report.results[i];
    c.expect(abs(r.point.value() - 1) <= Real(1e-10), "seed " + report.seeds[i].to_string() + " -> " +
                                                          r.point.to_string());
    c.expect(r.iterations <= 45, "seed " + report.seeds[i].to_string() + " took " +
                                     std::to_string(r.iterations) + " iterations");
  }
  for (std::size_t i = 0; i < report.results.size(); ++i)
  {
    for (std::size_t j = i + 1; j < report.results.size(); ++j)
    {
      c.expect(abs(report.results[i].point.value() - report.results[j].point.value()) <= Real(1e-8),
               "seeds disagree");
    }
  }
  c.expect(report.passed, "uniqueness report failed");

  auto banach = picard_solve(specimen("C-Banach"), 0.5, 0, 1.0, Real(1e-12));
  c.expect(abs(banach.point.value()) <= Real(1e-12), "Banach point " + banach.point.to_string());
  return c;
}

Check continuity()
{
  Check              c;
  const auto        &pair = specimen("E2");
  std::vector<Point> xs;
  for (int k = 1; k <= 40; ++k)
  {
    xs.emplace_back(1 - pow(Real(2), -k));
  }
  auto       report = continuity_diagnostics(pair, 0.5, 0, 1.0, xs);
  const Real unit   = e_norm(pair);
  for (std::size_t k = 0; k < xs.size(); ++k)
  {
    const Real expected = abs(log(xs[k].value())) / 2 * unit;
    c.expect(abs(report.displacement.values[k] - expected) <= Real(1e-10),
             "displacement off at k=" + std::to_string(k + 1));
  }
  c.expect(report.displacement.passed && report.displacement.eventually_decreasing, "displacement does not vanish");
  c.expect(report.passed(), "diagnostics at p=1 failed");

  auto probe = continuity_diagnostics(pair, 0.5, 0, 0.9, dyadic_approach(pair.domain(), 0.9));
  c.expect(!probe.fixed_point_check, "p=0.9 passed the fixed point check");
  const Real per_unit = probe.fixed_point_residual / unit;
  const Real exact    = abs(sqrt(Real(0.9)) - Real(0.9));
  c.expect(abs(per_unit - exact) <= Real(1e-12), "p=0.9 residual " + str(to_double(per_unit)));
  if (c.ok)
  {
    c.detail = "p=0.9 residual " + str(to_double(per_unit)) + " per unit";
  }
  return c;
}

Check determinism()
{
  Check                          c;
  const std::vector<std::string> args{"report-all", "--seed", "42", "--format", "json"};
  std::ostringstream             out1, out2, err;
  int                            code1 = cli::main_entry(args, out1, err);
  int                            code2 = cli::main_entry(args, out2, err);
  c.expect(code1 == cli::kExitPass && code2 == cli::kExitPass, "report-all did not pass: " + err.str());
  c.expect(out1.str() == out2.str(), "outputs differ");
  c.expect(!out1.str().empty(), "empty output");
  if (c.ok)
  {
    c.detail = std::to_string(out1.str().size()) + " identical bytes";
  }
  return c;
}

Check monotonicity()
{
  Check                      c;
  std::vector<ConstraintSet> sets;
  std::vector<FitResult>     fits;
  for (const auto &e : corpus())
  {
    sets.push_back(build_constraints(e.pair, kSamples, kSeed));
    fits.push_back(fit_min_ab(sets.back()));
  }
  SampleStream rng(2024);
  int          satisfied_first = 0;
  for (int i = 0; i < 200; ++i)
  {
    const auto  k   = rng.below(sets.size());
    const auto &fit = fits[k];
    Real        a, b;
    if (i % 2 == 0 && fit.feasible)
    {
      // near the fitted boundary, where either outcome is likely
      a = std::max<Real>(0, fit.argmin.a + rng.uniform(-0.05, 0.05));
      b = std::max<Real>(0, fit.argmin.b + rng.uniform(-0.05, 0.05));
    }
    else
    {
      a = rng.uniform(0, 1.5);
      b = rng.uniform(0, 1.5);
    }
    const Real a2 = a + rng.uniform(0, 0.5);
    const Real b2 = b + rng.uniform(0, 0.5);
    if (certify(sets[k], a, b).status == CertificateStatus::Satisfied)
    {
      ++satisfied_first;
      c.expect(certify(sets[k], a2, b2).status == CertificateStatus::Satisfied,
               sets[k].label + ": Satisfied then Violated");
    }
  }
  if (c.ok)
  {
    c.detail = "200 cases, " + std::to_string(satisfied_first) + " started Satisfied";
  }
  return c;
}

}  // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "cone metric axioms", 1.0, axioms},
      {2, "class membership, positive", 0, membership_positive},
      {3, "class membership, negative", 5.0, membership_negative},
      {4, "LP fit vs grid oracle", 10.0, fit_vs_oracle},
      {5, "geometric rate bound", 0, rate_bound},
      {6, "fixed point and uniqueness", 0, fixed_point_uniqueness},
      {7, "continuity diagnostics", 0, continuity},
      {8, "report-all determinism", 0, determinism},
      {9, "monotonicity under enlargement", 0, monotonicity},
  };

  int failures = 0;
  for (const auto &criterion : criteria)
  {
    const auto start = std::chrono::steady_clock::now();
    Check      check;
    try
    {
      check = criterion.body();
    }
    catch (const std::exception &e)
    {
      check.ok     = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0 && seconds > criterion.time_limit_s)
    {
      check.ok     = false;
      check.detail = "took " + str(seconds) + " s, limit " + str(criterion.time_limit_s) + " s";
    }
    failures += check.ok ? 0 : 1;
    std::printf("%s  #%d %-32s %8.3f s  %s\n", check.ok ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(),
                seconds, check.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
