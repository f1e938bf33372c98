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

#include "conefix/cone_metric_space.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "conefix/errors.hpp"
#include "conefix/sampling.hpp"

namespace conefix {

ConeMetricSpace::ConeMetricSpace(std::string label, PointDomain domain, Cone cone, MetricFn metric,
                                 NormSpec norm)
  : label_(std::move(label))
  , domain_(std::move(domain))
  , cone_(std::move(cone))
  , metric_(std::move(metric))
  , norm_(std::move(norm))
{
  if (!metric_)
  {
    throw PreconditionError("cone metric space '" + label_ + "' has no metric");
  }
}

EVector ConeMetricSpace::distance(const Point &x, const Point &y) const
{
  EVector d = metric_(x, y);
  if (d.size() != cone_.dim())
  {
    throw DimensionMismatch("metric of '" + label_ + "' returned dimension " +
                            std::to_string(d.size()) + ", expected " + std::to_string(cone_.dim()));
  }
  return d;
}

EVector exp_grid(std::size_t points)
{
  if (points == 0)
  {
    throw PreconditionError("exp grid needs at least one point");
  }
  std::vector<Real> w(points);
  for (std::size_t j = 0; j < points; ++j)
  {
    const Real t = points == 1 ? Real(0) : Real(j) / Real(points - 1);
    w[j]         = exp(t);
  }
  return EVector(std::move(w));
}

MetricFn weighted_abs_metric(EVector weights)
{
  return [w = std::move(weights)](const Point &x, const Point &y) { return point_distance(x, y) * w; };
}

ConeMetricSpace abs_metric_space(std::string label, PointDomain domain)
{
  return ConeMetricSpace(std::move(label), std::move(domain), Cone::orthant(1),
                         weighted_abs_metric(EVector{Real(1)}));
}

ConeMetricSpace exp_weighted_space(std::string label, PointDomain domain, std::size_t grid_points)
{
  return ConeMetricSpace(std::move(label), std::move(domain), Cone::orthant(grid_points),
                         weighted_abs_metric(exp_grid(grid_points)));
}

ConeMetricSpace scaled_pair_space(std::string label, PointDomain domain, const Real &alpha)
{
  if (alpha < 0)
  {
    throw PreconditionError("scaled pair metric needs alpha >= 0");
  }
  return ConeMetricSpace(std::move(label), std::move(domain), Cone::orthant(2),
                         weighted_abs_metric(EVector{Real(1), alpha}));
}

namespace {

struct AxiomTracker
{
  AxiomResult result;
  Real        tol;

  /// `raw` is the size of the failure; `scaled` decides pass/fail.
  void record(const Real &raw, const Real &scaled, std::vector<Point> witness)
  {
    if (scaled > tol)
    {
      result.passed = false;
    }
    if (raw > result.worst_violation)
    {
      result.worst_violation = raw;
      result.witness         = std::move(witness);
    }
  }
};

Real magnitude_scale(const EVector &v)
{
  return std::max(Real(1), v.max_abs());
}

std::size_t lattice_resolution(std::size_t dim, std::size_t budget)
{
  std::size_t g = 3;
  for (std::size_t cand = 5;; cand += 2)
  {
    std::size_t pool = 1;
    for (std::size_t i = 0; i < dim; ++i)
    {
      pool *= cand;
    }
    if (pool * pool * pool > budget)
    {
      break;
    }
    g = cand;
  }
  return g;
}

}  // namespace

AxiomReport check_metric_axioms(const ConeMetricSpace &space, std::size_t sample_count, std::uint64_t seed)
{
  if (sample_count == 0)
  {
    throw PreconditionError("check_metric_axioms needs sample_count >= 1");
  }
  const Cone &cone = space.cone();
  const Real  tol  = cone.coord_tol();

  AxiomTracker positivity{{"positivity"}, tol};
  AxiomTracker symmetry{{"symmetry"}, tol};
  AxiomTracker triangle{{"triangle"}, tol};

  auto check = [&](const Point &x, const Point &y, const Point &z) {
    const EVector dxy = space.distance(x, y);
    const EVector dyx = space.distance(y, x);
    const EVector dxz = space.distance(x, z);
    const EVector dyz = space.distance(y, z);

    if (x == y)
    {
      positivity.record(dxy.max_abs(), dxy.max_abs(), {x, y});
    }
    else
    {
      const Real outside = -dxy.min_coord();
      positivity.record(outside, outside / magnitude_scale(dxy), {x, y});
      if (dxy.max_abs() <= tol)
      {
        // distinct points at zero distance
        const Real gap = point_distance(x, y);
        positivity.record(gap, gap + tol + tol, {x, y});
      }
    }

    const Real asym = (dxy - dyx).max_abs();
    symmetry.record(asym, asym / magnitude_scale(dxy), {x, y});

    const Real deficit = -(dxz + dyz - dxy).min_coord();
    triangle.record(deficit, deficit / magnitude_scale(dxy), {x, y, z});
  };

  const auto        pool  = space.domain().grid(lattice_resolution(space.domain().dim(), std::max<std::size_t>(27, sample_count / 2)));
  const std::size_t p     = pool.size();
  const std::size_t grid  = std::min(sample_count, p * p * p);
  std::size_t       drawn = 0;
  for (std::size_t n = 0; n < grid; ++n, ++drawn)
  {
    check(pool[n / (p * p)], pool[(n / p) % p], pool[n % p]);
  }

  SampleStream stream(seed);
  for (; drawn < sample_count; ++drawn)
  {
    const Point x = stream.point_in(space.domain());
    const Point y = stream.point_in(space.domain());
    const Point z = stream.point_in(space.domain());
    check(x, y, z);
  }

  AxiomReport report;
  report.positivity   = std::move(positivity.result);
  report.symmetry     = std::move(symmetry.result);
  report.triangle     = std::move(triangle.result);
  report.samples_used = drawn;
  report.seed         = seed;
  return report;
}

Real estimate_normal_constant(const Cone &cone, const NormSpec &norm, std::size_t sample_count,
                              std::uint64_t seed)
{
  if (sample_count == 0)
  {
    throw PreconditionError("estimate_normal_constant needs sample_count >= 1");
  }
  const std::size_t n    = cone.dim();
  Real              best = 1;
  std::size_t       used = 0;

  auto consider = [&](const EVector &x, const EVector &y) {
    ++used;
    const Real ny = norm(y);
    if (ny > 0 && order_leq(cone, EVector(n), x) && order_leq(cone, x, y))
    {
      best = std::max(best, Real(norm(x) / ny));
    }
  };

  // Vertex pairs x <= y of the unit box: y ranges over nonzero 0/1 masks,
  // x over the submasks of y.
  constexpr std::size_t kMaxVertexDim = 12;
  if (n <= kMaxVertexDim)
  {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t ymask = 1; ymask <= full && used < sample_count; ++ymask)
    {
      for (std::uint64_t xmask = ymask;; xmask = (xmask - 1) & ymask)
      {
        if (used >= sample_count)
        {
          break;
        }
        EVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i)
        {
          x[i] = Real((xmask >> i) & 1U);
          y[i] = Real((ymask >> i) & 1U);
        }
        consider(x, y);
        if (xmask == 0)
        {
          break;
        }
      }
    }
  }

  SampleStream stream(seed);
  while (used < sample_count)
  {
    EVector x(n), y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      y[i] = Real(stream.unit());
      x[i] = y[i] * Real(stream.unit());
    }
    consider(x, y);
  }
  return best;
}

}  // namespace conefix
