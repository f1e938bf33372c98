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

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "conefix/real.hpp"

namespace conefix {

/// A point of the domain M. One-dimensional points convert implicitly from
/// scalars so interval specimens read naturally.
class Point
{
public:
  Point() = default;

  template <typename T>
    requires std::is_arithmetic_v<T> || std::same_as<T, Real>
  Point(T value)  // NOLINT(google-explicit-constructor)
    : coords_{Real(value)}
  {}

  explicit Point(std::vector<Real> coords)
    : coords_(std::move(coords))
  {}

  std::size_t dim() const noexcept { return coords_.size(); }

  const Real &operator[](std::size_t i) const { return coords_[i]; }
  Real &      operator[](std::size_t i) { return coords_[i]; }

  /// The single coordinate of a one-dimensional point.
  const Real &value() const;

  const std::vector<Real> &coords() const noexcept { return coords_; }

  friend bool operator==(const Point &, const Point &) = default;
  friend auto operator<=>(const Point &a, const Point &b) { return a.coords_ <=> b.coords_; }

  std::string to_string() const;

private:
  std::vector<Real> coords_;
};

/// Euclidean distance between two points of the same dimension.
Real point_distance(const Point &x, const Point &y);

/// Inclusive bound tolerance for domain membership.
inline constexpr double kDomainTol = 1e-12;

/// A closed interval [lo, hi] or an axis-aligned box in R^k.
class PointDomain
{
public:
  static PointDomain interval(const Real &lo, const Real &hi);
  static PointDomain box(std::vector<Real> lo, std::vector<Real> hi);

  std::size_t dim() const noexcept { return lo_.size(); }
  const Real &lo(std::size_t axis = 0) const { return lo_.at(axis); }
  const Real &hi(std::size_t axis = 0) const { return hi_.at(axis); }
  Point       lower_corner() const { return Point(lo_); }
  Point       upper_corner() const { return Point(hi_); }

  bool contains(const Point &p, double tol = kDomainTol) const;

  /// Uniform lattice with `per_axis` points along every axis (endpoints
  /// included), enumerated with the last axis varying fastest.
  std::vector<Point> grid(std::size_t per_axis) const;

  /// Point at fraction u in [0,1]^k of the box.
  Point at(const std::vector<Real> &u) const;

  std::string to_string() const;

private:
  PointDomain(std::vector<Real> lo, std::vector<Real> hi);

  std::vector<Real> lo_;
  std::vector<Real> hi_;
};

}  // namespace conefix
