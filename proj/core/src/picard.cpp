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

#include "conefix/picard.hpp"

#include <algorithm>

#include "conefix/errors.hpp"

namespace conefix {

std::string_view to_string(TraceStatus status)
{
  switch (status)
  {
  case TraceStatus::Converged:
    return "Converged";
  case TraceStatus::MaxIterations:
    return "MaxIterations";
  case TraceStatus::Diverged:
    return "Diverged";
  }
  return "?";
}

Real contraction_ratio(const Real &a, const Real &b)
{
  return (a + b) / (1 - b);
}

FixedPointResult picard_solve(const MappingPair &pair, const Real &a, const Real &b, const Point &x0,
                              const Real &tol, std::size_t max_iter)
{
  if (!(a >= 0) || !(b >= 0))
  {
    throw PreconditionError("picard_solve needs a, b >= 0");
  }
  if (!(a + 2 * b < 1))
  {
    throw PreconditionError("picard_solve needs a + 2b < 1, got a + 2b = " + format_real(a + 2 * b));
  }
  if (!(tol > 0))
  {
    throw PreconditionError("picard_solve needs tol > 0");
  }
  if (!pair.domain().contains(x0))
  {
    throw PreconditionError("picard_solve: x0 = " + x0.to_string() + " is outside domain " +
                            pair.domain().to_string() + " of '" + pair.label() + "'");
  }

  const auto &space  = pair.space();
  const Real  lambda = contraction_ratio(a, b);
  const Real  post   = lambda / (1 - lambda);

  IterationTrace trace{space, x0};
  trace.lambda                   = lambda;
  trace.point_convergence_caveat = !pair.declared().t_sequentially_convergent;
  trace.iterates.push_back(x0);
  trace.t_images.push_back(pair.apply_t(x0));

  Real lambda_pow = 1;
  for (std::size_t n = 0; n < max_iter; ++n)
  {
    const Point &x     = trace.iterates.back();
    Point        next  = pair.apply_s(x);
    Point        tnext = pair.apply_t(next);
    EVector      step  = space.distance(trace.t_images.back(), tnext);
    const Real   norm  = space.norm()(step);

    if (norm == 0)
    {
      // x is fixed: no further movement is possible.
      trace.status = TraceStatus::Converged;
      break;
    }

    trace.iterates.push_back(std::move(next));
    trace.t_images.push_back(std::move(tnext));
    trace.step_dists.push_back(std::move(step));
    trace.step_norms.push_back(norm);
    const Real &first = trace.step_norms.front();
    trace.a_priori_bound.push_back(lambda_pow / (1 - lambda) * first);
    lambda_pow *= lambda;

    if (norm > 10 * first)
    {
      trace.status = TraceStatus::Diverged;
      break;
    }
    if (post * norm <= tol && space.distance_norm(pair.apply_s(trace.iterates.back()), trace.iterates.back()) <= tol)
    {
      trace.status = TraceStatus::Converged;
      break;
    }
  }

  Point      point      = trace.iterates.back();
  const Real residual   = space.distance_norm(pair.apply_s(point), point);
  const auto iterations = trace.step_norms.size();
  return FixedPointResult{std::move(point), residual, iterations, std::move(trace)};
}

RateReport check_rate_bound(const IterationTrace &trace)
{
  const auto &steps = trace.step_norms;
  if (steps.size() < 2)
  {
    throw PreconditionError("check_rate_bound needs a trace with at least two steps");
  }
  if (trace.t_images.size() != steps.size() + 1)
  {
    throw PreconditionError("trace has " + std::to_string(trace.t_images.size()) + " T-images for " +
                            std::to_string(steps.size()) + " steps");
  }

  RateReport   report;
  const Real  &lambda = trace.lambda;
  const Real  &first  = steps.front();
  const Real   slack(kRateSlack);

  std::vector<Real> powers(steps.size());
  Real              p = 1;
  for (std::size_t n = 0; n < steps.size(); ++n, p *= lambda)
  {
    powers[n] = p;
  }

  for (std::size_t n = 0; n < steps.size(); ++n)
  {
    const Real bound = powers[n] * first;
    if (n + 1 < steps.size())
    {
      report.ratios.push_back(steps[n + 1] / steps[n]);
    }
    if (bound > 0)
    {
      report.max_relative_excess = std::max(report.max_relative_excess, Real((steps[n] - bound) / bound));
    }
    if (steps[n] > bound * (1 + slack))
    {
      report.passed = false;
      if (!report.violation_index)
      {
        report.violation_index = n;
      }
    }
  }

  // Cauchy tail: ||d(Tx_m, Tx_n)|| <= lambda^n / (1 - lambda) ||d(Tx_0, Tx_1)|| for m > n.
  const auto  &images = trace.t_images;
  const std::size_t count  = images.size();
  const std::size_t stride = std::max<std::size_t>(1, count / 64);
  for (std::size_t n = 0; n + 1 < count; n += stride)
  {
    for (std::size_t m = n + 1; m < count; m += (m - n < 8 ? 1 : stride))
    {
      ++report.cauchy_pairs_checked;
      const Real dist  = trace.space.distance_norm(images[m], images[n]);
      const Real bound = (n < powers.size() ? powers[n] : Real(0)) / (1 - lambda) * first;
      if (dist > bound * (1 + slack))
      {
        report.cauchy_passed = false;
        if (!report.cauchy_violation)
        {
          report.cauchy_violation = std::make_pair(m, n);
        }
      }
    }
  }
  report.passed = report.passed && report.cauchy_passed;
  return report;
}

}  // namespace conefix
