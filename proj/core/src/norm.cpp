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

#include "conefix/norm.hpp"

#include <algorithm>
#include <string>

#include "conefix/errors.hpp"

namespace conefix {

NormSpec::NormSpec(Kind kind, std::vector<Real> weights)
  : kind_(kind)
  , weights_(std::move(weights))
{}

NormSpec NormSpec::sup()
{
  return NormSpec(Kind::Sup);
}

NormSpec NormSpec::euclidean()
{
  return NormSpec(Kind::Euclidean);
}

NormSpec NormSpec::sup_plus_weighted(std::vector<Real> weights)
{
  for (const auto &w : weights)
  {
    if (!is_finite(w) || w < 0)
    {
      throw PreconditionError("difference weights must be finite and nonnegative");
    }
  }
  return NormSpec(Kind::SupPlusWeighted, std::move(weights));
}

NormSpec NormSpec::finite_difference(std::size_t points, const Real &lo, const Real &hi)
{
  if (points < 2 || !(hi > lo))
  {
    throw PreconditionError("finite-difference norm needs >= 2 points on a nondegenerate interval");
  }
  const Real h = (hi - lo) / Real(points - 1);
  return sup_plus_weighted(std::vector<Real>(points - 1, Real(1) / h));
}

Real NormSpec::operator()(const EVector &x) const
{
  switch (kind_)
  {
  case Kind::Sup:
    return x.max_abs();
  case Kind::Euclidean:
  {
    Real s = 0;
    for (const auto &c : x)
    {
      s += c * c;
    }
    return sqrt(s);
  }
  case Kind::SupPlusWeighted:
  {
    if (weights_.size() + 1 != x.size())
    {
      throw DimensionMismatch("weighted norm has " + std::to_string(weights_.size()) +
                              " weights for a vector of dimension " + std::to_string(x.size()));
    }
    Real slope = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
    {
      slope = std::max(slope, Real(weights_[i] * abs(x[i + 1] - x[i])));
    }
    return x.max_abs() + slope;
  }
  }
  return 0;
}

}  // namespace conefix
