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

#include "conefix/cone.hpp"

#include <string>

#include "conefix/errors.hpp"

namespace conefix {

Cone::Cone(ConeKind kind, std::size_t dim, Real margin, Real tol)
  : kind_(kind)
  , dim_(dim)
  , interior_margin_(std::move(margin))
  , coord_tol_(std::move(tol))
{}

Cone Cone::orthant(std::size_t dim, double interior_margin, double coord_tol)
{
  if (dim == 0)
  {
    throw PreconditionError("orthant cone needs dimension >= 1");
  }
  if (!(interior_margin > 0) || !(coord_tol >= 0))
  {
    throw PreconditionError("cone tolerances must be positive");
  }
  return Cone(ConeKind::Orthant, dim, Real(interior_margin), Real(coord_tol));
}

void Cone::check_dim(const EVector &v) const
{
  if (v.size() != dim_)
  {
    throw DimensionMismatch("cone of dimension " + std::to_string(dim_) +
                            " tested against vector of dimension " + std::to_string(v.size()));
  }
}

bool Cone::contains(const EVector &v) const
{
  check_dim(v);
  for (const auto &c : v)
  {
    if (c < -coord_tol_)
    {
      return false;
    }
  }
  return true;
}

bool Cone::interior_contains(const EVector &v) const
{
  check_dim(v);
  for (const auto &c : v)
  {
    if (!(c > interior_margin_))
    {
      return false;
    }
  }
  return true;
}

bool cone_contains(const Cone &cone, const EVector &v)
{
  return cone.contains(v);
}

bool order_leq(const Cone &cone, const EVector &x, const EVector &y)
{
  require_same_dim(x, y, "order_leq");
  return cone.contains(y - x);
}

bool order_ll(const Cone &cone, const EVector &x, const EVector &y)
{
  require_same_dim(x, y, "order_ll");
  return cone.interior_contains(y - x);
}

}  // namespace conefix
