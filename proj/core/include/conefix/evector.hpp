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
#include <initializer_list>
#include <span>
#include <vector>

#include "conefix/real.hpp"

namespace conefix {

/// Element of the ordered vector space E, stored by coordinates.
///
/// Coordinates are always finite; construction rejects NaN and infinities.
class EVector
{
public:
  EVector() = default;
  explicit EVector(std::size_t dim, const Real &fill = Real(0));
  explicit EVector(std::vector<Real> coords);
  EVector(std::initializer_list<Real> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  const Real &operator[](std::size_t i) const { return coords_[i]; }
  Real &      operator[](std::size_t i) { return coords_[i]; }

  std::span<const Real> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  EVector &operator+=(const EVector &rhs);
  EVector &operator-=(const EVector &rhs);
  EVector &operator*=(const Real &s);

  friend EVector operator+(EVector lhs, const EVector &rhs) { return lhs += rhs; }
  friend EVector operator-(EVector lhs, const EVector &rhs) { return lhs -= rhs; }
  friend EVector operator*(EVector v, const Real &s) { return v *= s; }
  friend EVector operator*(const Real &s, EVector v) { return v *= s; }
  friend EVector operator-(EVector v) { return v *= Real(-1); }

  friend bool operator==(const EVector &, const EVector &) = default;

  /// Largest absolute coordinate.
  Real max_abs() const;
  /// Smallest coordinate (signed).
  Real min_coord() const;

private:
  std::vector<Real> coords_;
};

/// Throws DimensionMismatch unless both vectors have the same dimension.
void require_same_dim(const EVector &x, const EVector &y, const char *what);

}  // namespace conefix
