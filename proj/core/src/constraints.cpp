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

#include "conefix/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "conefix/errors.hpp"
#include "conefix/sampling.hpp"

namespace conefix {

bool PairConstraint::infeasible() const
{
  for (std::size_t i = 0; i < lhs.size(); ++i)
  {
    if (a_term[i] == 0 && b_term[i] == 0 && lhs[i] > Real(kOrderTol) * order_scale(lhs[i]))
    {
      return true;
    }
  }
  return false;
}

EVector constraint_residual(const PairConstraint &c, const Real &a, const Real &b)
{
  return c.lhs - a * c.a_term - b * c.b_term;
}

Real order_scale(const Real &lhs)
{
  return std::max(Real(1), Real(abs(lhs)));
}

namespace {

constexpr int kNearDecades = 6;

/// x moved by delta along `axis`, toward the interior if the first try leaves the box.
Point nudge(const PointDomain &domain, const Point &x, const Real &delta, std::size_t axis, bool forward)
{
  std::vector<Real> c = x.coords();
  c[axis] += forward ? delta : -delta;
  if (c[axis] > domain.hi(axis) || c[axis] < domain.lo(axis))
  {
    c[axis] = x[axis] + (forward ? -delta : delta);
  }
  c[axis] = std::clamp(c[axis], domain.lo(axis), domain.hi(axis));
  return Point(std::move(c));
}

Real decade(int k)
{
  Real d = 1;
  for (int i = 0; i < k; ++i)
  {
    d /= 10;
  }
  return d;
}

}  // namespace

std::vector<std::pair<Point, Point>> sample_pairs(const PointDomain &domain, std::size_t count,
                                                  std::uint64_t seed)
{
  std::vector<std::pair<Point, Point>> out;
  out.reserve(count);
  auto push = [&](Point x, Point y) {
    if (out.size() < count)
    {
      out.emplace_back(std::move(x), std::move(y));
    }
  };

  for (const Point &corner : {domain.lower_corner(), domain.upper_corner()})
  {
    const bool forward = corner == domain.lower_corner();
    for (int k = 1; k <= kNearDecades; ++k)
    {
      push(corner, nudge(domain, corner, decade(k), 0, forward));
    }
  }

  const std::size_t quarter = count / 4;
  std::size_t       per_axis = 2;
  auto pool_size = [&](std::size_t g) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < domain.dim(); ++i)
    {
      total *= g;
    }
    return total;
  };
  while (pool_size(per_axis + 1) * (pool_size(per_axis + 1) - 1) / 2 <= quarter)
  {
    ++per_axis;
  }
  const auto pool = domain.grid(per_axis);
  for (std::size_t i = 0; i < pool.size() && out.size() < count; ++i)
  {
    for (std::size_t j = i + 1; j < pool.size(); ++j)
    {
      push(pool[i], pool[j]);
    }
  }

  SampleStream stream(seed);
  const std::size_t near_end = std::min(count, out.size() + quarter);
  for (std::size_t i = 0; out.size() < near_end; ++i)
  {
    Point      anchor  = stream.point_in(domain);
    const bool forward = stream.unit() < 0.5;
    Point      partner = nudge(domain, anchor, decade(1 + static_cast<int>(i % kNearDecades)), i % domain.dim(), forward);
    push(std::move(anchor), std::move(partner));
  }
  while (out.size() < count)
  {
    Point x = stream.point_in(domain);
    Point y = stream.point_in(domain);
    push(std::move(x), std::move(y));
  }
  return out;
}

PairConstraint evaluate_constraint(const MappingPair &pair, const Point &x, const Point &y)
{
  const auto &space = pair.space();
  const Point tx    = pair.apply_t(x);
  const Point ty    = pair.apply_t(y);
  const Point tsx   = pair.apply_t(pair.apply_s(x));
  const Point tsy   = pair.apply_t(pair.apply_s(y));
  return PairConstraint{space.distance(tsx, tsy), space.distance(tx, ty),
                        space.distance(tx, tsx) + space.distance(ty, tsy), x, y};
}

ConstraintSet build_constraints(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed)
{
  if (sample_count == 0)
  {
    throw PreconditionError("build_constraints needs sample_count >= 1");
  }
  ConstraintSet set;
  set.label = pair.label();
  set.seed  = seed;
  for (const auto &[x, y] : sample_pairs(pair.domain(), sample_count, seed))
  {
    ++set.pairs_sampled;
    if (x == y)
    {
      continue;
    }
    set.constraints.push_back(evaluate_constraint(pair, x, y));
  }
  std::sort(set.constraints.begin(), set.constraints.end(), [](const PairConstraint &l, const PairConstraint &r) {
    return std::tie(l.x, l.y) < std::tie(r.x, r.y);
  });
  return set;
}

}  // namespace conefix
