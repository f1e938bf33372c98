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

#include "conefix/cli/report_all.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>

#include "conefix/errors.hpp"
#include "conefix/fixed_point_checks.hpp"
#include "conefix/picard.hpp"

namespace conefix::cli {

namespace {

// Sampled fits approach the true minimum from below.
constexpr double kObjectiveTol  = 1e-3;
constexpr double kFixedPointTol = 1e-6;
constexpr std::size_t kUniquenessSeeds = 5;

std::string short_real(const Real &r)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
  return buf;
}

// Rounded to six decimals and always shown with a fractional part.
std::string point_text(const Point &p)
{
  std::string out;
  for (std::size_t i = 0; i < p.dim(); ++i)
  {
    double v = std::round(to_double(p[i]) * 1e6) / 1e6;
    if (v == 0)
    {
      v = 0;
    }
    std::string s = short_real(v);
    if (s.find_first_of(".e") == std::string::npos)
    {
      s += ".0";
    }
    out += (i ? "," : "") + s;
  }
  return p.dim() == 1 ? out : "(" + out + ")";
}

std::string constants_text(const ReportRow &row)
{
  if (!row.member_ab)
  {
    return "(a,b) unspecified";
  }
  const auto &ab = *row.member_ab;
  if (row.t_identity && row.regime == Regime::BZero)
  {
    return "b=0, a=" + short_real(ab.a);
  }
  if (row.t_identity && row.regime == Regime::AZero)
  {
    return "a=0, b=" + short_real(ab.b);
  }
  return "(a,b)=(" + short_real(ab.a) + "," + short_real(ab.b) + ")";
}

ReportRow evaluate(const CorpusEntry &entry, std::uint64_t seed, std::size_t samples, double tol)
{
  const auto &pair     = entry.pair;
  const auto &expected = entry.expected;

  ReportRow row;
  row.label              = pair.label();
  row.t_identity         = pair.declared().t_is_identity;
  row.regime             = entry.regime;
  row.e_dim              = pair.space().e_dim();
  row.source             = entry.source;
  row.expected_violation = expected.theorem_inapplicable;

  auto fail = [&row](std::string what) { row.failures.push_back(std::move(what)); };

  const auto set = build_constraints(pair, samples, seed);
  row.fit        = fit_min_ab(set);

  if (expected.theorem_inapplicable)
  {
    if (row.fit.feasible && row.fit.objective < 1 - kOrderTol)
    {
      fail("fit found a+2b=" + short_real(row.fit.objective) + " < 1");
    }
  }
  else if (!row.fit.feasible || row.fit.objective >= 1)
  {
    fail("fit found no a+2b<1");
  }
  if (expected.min_a_plus_2b && row.fit.feasible &&
      abs(row.fit.objective - *expected.min_a_plus_2b) > kObjectiveTol)
  {
    fail("fitted a+2b=" + short_real(row.fit.objective) + ", expected " + short_real(*expected.min_a_plus_2b));
  }

  if (expected.member_of)
  {
    row.member_ab     = expected.member_of;
    row.member_status = certify(set, expected.member_of->a, expected.member_of->b).status;
    if (*row.member_status != CertificateStatus::Satisfied)
    {
      fail("certificate violated at member constants");
    }
  }
  if (expected.violated_at)
  {
    row.probe_ab     = expected.violated_at;
    row.probe_status = certify(set, expected.violated_at->a, expected.violated_at->b).status;
    if (*row.probe_status != CertificateStatus::Violated)
    {
      fail("certificate satisfied at probe constants");
    }
  }

  if (!expected.theorem_inapplicable && expected.member_of)
  {
    const auto &ab = *expected.member_of;
    try
    {
      auto result     = picard_solve(pair, ab.a, ab.b, entry.default_x0, Real(tol));
      row.fixed_point = result.point;
      row.iterations  = result.iterations;
      if (result.trace.status != TraceStatus::Converged)
      {
        fail(std::string("solve ") + std::string(to_string(result.trace.status)));
      }
      if (expected.fixed_point && abs(result.point.value() - *expected.fixed_point) > kFixedPointTol)
      {
        fail("fixed point " + point_text(result.point) + ", expected " + short_real(*expected.fixed_point));
      }
      auto uniq  = verify_uniqueness(pair, ab.a, ab.b, pair.domain().grid(kUniquenessSeeds), Real(tol));
      row.unique = uniq.passed;
      if (!uniq.passed)
      {
        fail("seeds reached different fixed points");
      }
    }
    catch (const Error &e)
    {
      fail(e.what());
    }
  }

  row.pass = row.failures.empty();
  return row;
}

}  // namespace

std::string ReportRow::line() const
{
  std::string out = label + " | " + (t_identity ? "T=id" : "T≠id") + " | ";
  if (expected_violation)
  {
    out += "infeasible for a+2b<1 | ";
    out += pass ? "PASS (expected violation)" : "FAIL";
    return out;
  }
  out += constants_text(*this) + " | ";
  out += fixed_point ? "fixed point " + point_text(*fixed_point) : std::string("no fixed point");
  out += pass ? " | PASS" : " | FAIL";
  return out;
}

bool AggregateReport::all_passed() const
{
  for (const auto &row : rows)
  {
    if (!row.pass)
    {
      return false;
    }
  }
  return !rows.empty();
}

AggregateReport report_all(std::uint64_t seed, std::size_t samples, double tol)
{
  const auto &entries = corpus();

  std::vector<std::future<ReportRow>> jobs;
  jobs.reserve(entries.size());
  for (const auto &entry : entries)
  {
    jobs.push_back(std::async(std::launch::async, evaluate, std::cref(entry), seed, samples, tol));
  }

  AggregateReport report{seed, samples, tol, {}};
  for (auto &job : jobs)
  {
    report.rows.push_back(job.get());
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ReportRow &l, const ReportRow &r) { return l.label < r.label; });
  return report;
}

}  // namespace conefix::cli
