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

#include "conefix/fixed_point_checks.hpp"

#include <algorithm>

#include "conefix/errors.hpp"

namespace conefix {

UniquenessReport verify_uniqueness(const MappingPair &pair, const Real &a, const Real &b,
                                   const std::vector<Point> &seeds, const Real &tol, std::size_t max_iter)
{
  if (!(a < 1))
  {
    throw PreconditionError("verify_uniqueness needs a < 1");
  }
  for (const auto &s : seeds)
  {
    if (!pair.domain().contains(s))
    {
      throw PreconditionError("seed " + s.to_string() + " is outside domain " + pair.domain().to_string());
    }
  }

  UniquenessReport report;
  report.seeds = seeds;
  report.tol   = tol;
  for (const auto &s : seeds)
  {
    try
    {
      report.results.push_back(picard_solve(pair, a, b, s, tol, max_iter));
    }
    catch (const Error &e)
    {
      throw SolveError("'" + pair.label() + "': solve from seed " + s.to_string() + " failed: " + e.what());
    }
  }
  for (std::size_t i = 0; i < report.results.size(); ++i)
  {
    for (std::size_t j = i + 1; j < report.results.size(); ++j)
    {
      report.max_pairwise_distance = std::max(
          report.max_pairwise_distance, pair.space().distance_norm(report.results[i].point, report.results[j].point));
    }
  }
  report.passed = report.max_pairwise_distance <= 10 * tol;
  return report;
}

namespace {

SequenceCheck summarize(std::vector<Real> values, const Real &tol)
{
  SequenceCheck check;
  check.values      = std::move(values);
  check.final_value = check.values.empty() ? Real(0) : check.values.back();

  bool decreasing = true;
  for (std::size_t k = check.values.size() / 2 + 1; k < check.values.size(); ++k)
  {
    const Real &prev = check.values[k - 1];
    if (check.values[k] > prev + Real(1e-12) * std::max(Real(1), prev))
    {
      decreasing = false;
    }
  }
  check.eventually_decreasing = decreasing;
  check.passed                = !check.values.empty() && decreasing && check.final_value <= tol;
  return check;
}

}  // namespace

DiagnosticsReport continuity_diagnostics(const MappingPair &pair, const Real &a, const Real &b, const Point &p,
                                         const std::vector<Point> &approach, const Real &tol)
{
  if (!(b < 1))
  {
    throw PreconditionError("continuity_diagnostics needs b < 1");
  }
  if (!pair.domain().contains(p))
  {
    throw DomainError("diagnostics point " + p.to_string() + " is outside domain " + pair.domain().to_string());
  }
  for (const auto &x : approach)
  {
    if (!pair.domain().contains(x))
    {
      throw DomainError("approach sequence leaves domain " + pair.domain().to_string() + " at " + x.to_string());
    }
  }

  const auto &space = pair.space();
  const Point sp    = pair.apply_s(p);
  const Point tp    = pair.apply_t(p);
  const Point tsp   = pair.apply_t(sp);

  std::vector<Real> displacement;
  std::vector<Real> continuity;
  bool              bound_holds = true;
  for (const auto &x : approach)
  {
    const Point tx  = pair.apply_t(x);
    const Point tsx = pair.apply_t(pair.apply_s(x));
    displacement.push_back(space.distance_norm(tx, tsx));
    continuity.push_back(space.distance_norm(tsx, tsp));

    // (1 - b) d(TSx, Tx) <= (1 + a) d(Tx, Tp) holds coordinatewise whenever p is fixed.
    const EVector gap = (1 + a) * space.distance(tx, tp) - (1 - b) * space.distance(tsx, tx);
    if (gap.min_coord() < -Real(kCoordTol) * std::max(Real(1), gap.max_abs()))
    {
      bound_holds = false;
    }
  }

  DiagnosticsReport report;
  report.p                           = p;
  report.displacement                = summarize(std::move(displacement), tol);
  report.fixed_point_residual_vector = space.distance(sp, p);
  report.fixed_point_residual        = space.norm()(report.fixed_point_residual_vector);
  report.fixed_point_check           = report.fixed_point_residual <= tol;
  report.displacement_bound_holds    = bound_holds;
  report.continuity                  = summarize(std::move(continuity), tol);
  return report;
}

std::vector<Point> dyadic_approach(const PointDomain &domain, const Point &p, std::size_t count)
{
  std::vector<Point> seq;
  seq.reserve(count);
  Real step = 1;
  for (std::size_t k = 1; k <= count; ++k)
  {
    step /= 2;
    std::vector<Real> c = p.coords();
    for (std::size_t i = 0; i < c.size(); ++i)
    {
      Real v = p[i] - step;
      if (v < domain.lo(i))
      {
        v = p[i] + step;
      }
      c[i] = std::clamp(v, domain.lo(i), domain.hi(i));
    }
    seq.emplace_back(std::move(c));
  }
  return seq;
}

}  // namespace conefix
