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

#include "conefix/point.hpp"

#include <cmath>

#include "conefix/errors.hpp"
#include "conefix/sampling.hpp"

namespace conefix {

const Real &Point::value() const
{
  if (coords_.size() != 1)
  {
    throw DimensionMismatch("scalar value requested from a point of dimension " +
                            std::to_string(coords_.size()));
  }
  return coords_.front();
}

std::string Point::to_string() const
{
  if (coords_.size() == 1)
  {
    return format_real(coords_.front());
  }
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i)
  {
    out += (i ? ", " : "") + format_real(coords_[i]);
  }
  return out + ")";
}

Real point_distance(const Point &x, const Point &y)
{
  if (x.dim() != y.dim())
  {
    throw DimensionMismatch("points of dimension " + std::to_string(x.dim()) + " and " +
                            std::to_string(y.dim()));
  }
  if (x.dim() == 1)
  {
    return abs(x[0] - y[0]);
  }
  Real s = 0;
  for (std::size_t i = 0; i < x.dim(); ++i)
  {
    s += (x[i] - y[i]) * (x[i] - y[i]);
  }
  return sqrt(s);
}

PointDomain::PointDomain(std::vector<Real> lo, std::vector<Real> hi)
  : lo_(std::move(lo))
  , hi_(std::move(hi))
{
  if (lo_.empty() || lo_.size() != hi_.size())
  {
    throw PreconditionError("point domain needs matching, nonempty bounds");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i)
  {
    if (!is_finite(lo_[i]) || !is_finite(hi_[i]) || hi_[i] < lo_[i])
    {
      throw PreconditionError("point domain is empty along axis " + std::to_string(i));
    }
  }
}

PointDomain PointDomain::interval(const Real &lo, const Real &hi)
{
  return PointDomain({lo}, {hi});
}

PointDomain PointDomain::box(std::vector<Real> lo, std::vector<Real> hi)
{
  return PointDomain(std::move(lo), std::move(hi));
}

bool PointDomain::contains(const Point &p, double tol) const
{
  if (p.dim() != dim())
  {
    return false;
  }
  for (std::size_t i = 0; i < dim(); ++i)
  {
    if (!is_finite(p[i]) || p[i] < lo_[i] - Real(tol) || p[i] > hi_[i] + Real(tol))
    {
      return false;
    }
  }
  return true;
}

Point PointDomain::at(const std::vector<Real> &u) const
{
  std::vector<Real> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
  {
    c[i] = u[i] >= 1 ? hi_[i] : lo_[i] + (hi_[i] - lo_[i]) * u[i];
  }
  return Point(std::move(c));
}

std::vector<Point> PointDomain::grid(std::size_t per_axis) const
{
  if (per_axis < 2)
  {
    return {at(std::vector<Real>(dim(), Real(0.5)))};
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim(); ++i)
  {
    total *= per_axis;
  }
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> idx(dim(), 0);
  for (std::size_t n = 0; n < total; ++n)
  {
    std::vector<Real> u(dim());
    for (std::size_t i = 0; i < dim(); ++i)
    {
      u[i] = Real(idx[i]) / Real(per_axis - 1);
    }
    out.push_back(at(u));
    for (std::size_t i = dim(); i-- > 0;)
    {
      if (++idx[i] < per_axis)
      {
        break;
      }
      idx[i] = 0;
    }
  }
  return out;
}

std::string PointDomain::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i)
  {
    out += (i ? " x " : "") + std::string("[") + format_real(lo_[i]) + ", " + format_real(hi_[i]) + "]";
  }
  return out;
}

Point SampleStream::point_in(const PointDomain &domain)
{
  std::vector<Real> c(domain.dim());
  for (std::size_t i = 0; i < domain.dim(); ++i)
  {
    c[i] = uniform(domain.lo(i), domain.hi(i));
  }
  return Point(std::move(c));
}

}  // namespace conefix
