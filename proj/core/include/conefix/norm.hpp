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

#pragma once

#include <cstddef>
#include <vector>

#include "conefix/evector.hpp"

namespace conefix {

/// Banach norm on E.
///
/// SupPlusWeighted is the grid form of ||f||_inf + ||f'||_inf:
///   ||x|| = max_i |x_i| + max_i w_i |x_{i+1} - x_i|
/// with one weight per adjacent coordinate pair (1/h for a uniform grid).
class NormSpec
{
public:
  enum class Kind
  {
    Sup,
    Euclidean,
    SupPlusWeighted
  };

  static NormSpec sup();
  static NormSpec euclidean();
  static NormSpec sup_plus_weighted(std::vector<Real> weights);
  /// Forward-difference weights 1/h for `points` uniform samples of [lo, hi].
  static NormSpec finite_difference(std::size_t points, const Real &lo, const Real &hi);

  Kind                     kind() const noexcept { return kind_; }
  const std::vector<Real> &weights() const noexcept { return weights_; }

  Real operator()(const EVector &x) const;

private:
  explicit NormSpec(Kind kind, std::vector<Real> weights = {});

  Kind              kind_;
  std::vector<Real> weights_;
};

}  // namespace conefix
