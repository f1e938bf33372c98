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

#include "conefix/evector.hpp"

#include <algorithm>
#include <string>

#include "conefix/errors.hpp"

namespace conefix {
namespace {

void require_finite(const std::vector<Real> &coords)
{
  for (std::size_t i = 0; i < coords.size(); ++i)
  {
    if (!is_finite(coords[i]))
    {
      throw PreconditionError("EVector coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

EVector::EVector(std::size_t dim, const Real &fill)
  : coords_(dim, fill)
{
  require_finite(coords_);
}

EVector::EVector(std::vector<Real> coords)
  : coords_(std::move(coords))
{
  require_finite(coords_);
}

EVector::EVector(std::initializer_list<Real> coords)
  : coords_(coords)
{
  require_finite(coords_);
}

EVector &EVector::operator+=(const EVector &rhs)
{
  require_same_dim(*this, rhs, "EVector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i)
  {
    coords_[i] += rhs.coords_[i];
  }
  return *this;
}

EVector &EVector::operator-=(const EVector &rhs)
{
  require_same_dim(*this, rhs, "EVector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i)
  {
    coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

EVector &EVector::operator*=(const Real &s)
{
  for (auto &c : coords_)
  {
    c *= s;
  }
  return *this;
}

Real EVector::max_abs() const
{
  Real m = 0;
  for (const auto &c : coords_)
  {
    m = std::max(m, Real(abs(c)));
  }
  return m;
}

Real EVector::min_coord() const
{
  if (coords_.empty())
  {
    return 0;
  }
  return *std::min_element(coords_.begin(), coords_.end());
}

void require_same_dim(const EVector &x, const EVector &y, const char *what)
{
  if (x.size() != y.size())
  {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(x.size()) +
                            " and " + std::to_string(y.size()));
  }
}

}  // namespace conefix
