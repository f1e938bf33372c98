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

#include "conefix/evector.hpp"

namespace conefix {

/// Coordinate tolerance for cone membership and vector equality.
inline constexpr double kCoordTol = 1e-12;
/// Default margin for strict interior tests (x << y).
inline constexpr double kInteriorMargin = 1e-9;

enum class ConeKind
{
  Orthant
};

/// A closed convex cone P in E together with the tolerances used to decide
/// membership. Only the nonnegative orthant is built in.
class Cone
{
public:
  static Cone orthant(std::size_t dim, double interior_margin = kInteriorMargin,
                      double coord_tol = kCoordTol);

  ConeKind    kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  Real        interior_margin() const noexcept { return interior_margin_; }
  Real        coord_tol() const noexcept { return coord_tol_; }

  /// v in P, up to coord_tol per coordinate.
  bool contains(const EVector &v) const;
  /// v in Int P, with every coordinate clearing interior_margin.
  bool interior_contains(const EVector &v) const;

private:
  Cone(ConeKind kind, std::size_t dim, Real margin, Real tol);

  void check_dim(const EVector &v) const;

  ConeKind    kind_;
  std::size_t dim_;
  Real        interior_margin_;
  Real        coord_tol_;
};

bool cone_contains(const Cone &cone, const EVector &v);

/// x <= y  iff  y - x in P.
bool order_leq(const Cone &cone, const EVector &x, const EVector &y);

/// x << y  iff  y - x in Int P.
bool order_ll(const Cone &cone, const EVector &x, const EVector &y);

}  // namespace conefix
