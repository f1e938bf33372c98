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

#include "conefix/mapping_pair.hpp"

#include <algorithm>
#include <limits>

#include "conefix/errors.hpp"
#include "conefix/sampling.hpp"

namespace conefix {

MappingPair::MappingPair(std::string label, ConeMetricSpace space, PointMap s, PointMap t,
                         DeclaredProperties declared, std::optional<PointDomain> t_range)
  : label_(std::move(label))
  , space_(std::move(space))
  , s_(std::move(s))
  , t_(std::move(t))
  , declared_(declared)
  , t_range_(t_range ? std::move(*t_range) : space_.domain())
{
  if (!s_ || !t_)
  {
    throw PreconditionError("specimen '" + label_ + "' is missing S or T");
  }
  if (t_range_.dim() != space_.domain().dim())
  {
    throw DimensionMismatch("specimen '" + label_ + "': T range and domain differ in dimension");
  }
}

void MappingPair::require_in_domain(const Point &x, const char *map) const
{
  if (!domain().contains(x))
  {
    throw DomainError("specimen '" + label_ + "': " + map + " applied to " + x.to_string() +
                      " outside domain " + domain().to_string());
  }
}

Point MappingPair::apply_s(const Point &x) const
{
  require_in_domain(x, "S");
  Point image = s_(x);
  if (!domain().contains(image))
  {
    throw DomainError("specimen '" + label_ + "': S(" + x.to_string() + ") = " + image.to_string() +
                      " leaves domain " + domain().to_string());
  }
  return image;
}

Point MappingPair::apply_t(const Point &x) const
{
  require_in_domain(x, "T");
  Point image = t_(x);
  if (!t_range_.contains(image))
  {
    throw DomainError("specimen '" + label_ + "': T(" + x.to_string() + ") = " + image.to_string() +
                      " leaves T range " + t_range_.to_string());
  }
  return image;
}

namespace {

std::vector<Point> sample_points(const PointDomain &domain, std::size_t count, std::uint64_t seed)
{
  std::size_t per_axis = std::max<std::size_t>(2, count / 2);
  if (domain.dim() > 1)
  {
    per_axis = 2;
    while (true)
    {
      std::size_t total = 1;
      for (std::size_t i = 0; i < domain.dim(); ++i)
      {
        total *= per_axis + 1;
      }
      if (total > count / 2)
      {
        break;
      }
      ++per_axis;
    }
  }
  auto points = domain.grid(per_axis);
  if (points.size() > count)
  {
    points.resize(count);
  }
  SampleStream stream(seed);
  while (points.size() < count)
  {
    points.push_back(stream.point_in(domain));
  }
  return points;
}

}  // namespace

ClosureReport check_closure(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed)
{
  ClosureReport report;
  for (const auto &x : sample_points(pair.domain(), sample_count, seed))
  {
    ++report.samples;
    try
    {
      pair.apply_s(x);
    }
    catch (const DomainError &)
    {
      report.s_closed = false;
      report.s_escapes.push_back(x);
    }
    try
    {
      pair.apply_t(x);
    }
    catch (const DomainError &)
    {
      report.t_closed = false;
      report.t_escapes.push_back(x);
    }
  }
  return report;
}

Real injectivity_separation(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed)
{
  const auto points = sample_points(pair.domain(), sample_count, seed);
  SampleStream stream(seed ^ 0x9e3779b97f4a7c15ULL);
  Real         best = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    const Point &x = points[i];
    const Point &y = points[stream.below(points.size())];
    if (x == y)
    {
      continue;
    }
    const Real base = pair.space().distance_norm(x, y);
    if (base > 0)
    {
      best = std::min(best, Real(pair.space().distance_norm(pair.apply_t(x), pair.apply_t(y)) / base));
    }
  }
  return best;
}

}  // namespace conefix
