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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conefix/cone_metric_space.hpp"
#include "conefix/point.hpp"

namespace conefix {

using PointMap = std::function<Point(const Point &)>;

/// Analytic properties a specimen declares about itself. They cannot be
/// established from samples; only injectivity gets a sanity check.
struct DeclaredProperties
{
  bool t_injective                  = true;
  bool t_continuous                 = true;
  bool t_sequentially_convergent    = true;
  bool t_subsequentially_convergent = true;
  bool s_continuous                 = true;
  bool t_is_identity                = false;
};

/// A specimen (M, S, T).
///
/// S must map M into itself. T-images only need to lie in `t_range`, the
/// set on which the metric is evaluated for T-images; it defaults to M.
class MappingPair
{
public:
  MappingPair(std::string label, ConeMetricSpace space, PointMap s, PointMap t,
              DeclaredProperties declared, std::optional<PointDomain> t_range = std::nullopt);

  const std::string &       label() const noexcept { return label_; }
  const ConeMetricSpace &   space() const noexcept { return space_; }
  const PointDomain &       domain() const noexcept { return space_.domain(); }
  const PointDomain &       t_range() const noexcept { return t_range_; }
  const DeclaredProperties &declared() const noexcept { return declared_; }

  /// S x. Throws DomainError if x or its image leaves M.
  Point apply_s(const Point &x) const;
  /// T x. Throws DomainError if x leaves M or its image leaves t_range.
  Point apply_t(const Point &x) const;

private:
  void require_in_domain(const Point &x, const char *map) const;

  std::string        label_;
  ConeMetricSpace    space_;
  PointMap           s_;
  PointMap           t_;
  DeclaredProperties declared_;
  PointDomain        t_range_;
};

struct ClosureReport
{
  bool               s_closed = true;
  bool               t_closed = true;
  std::size_t        samples  = 0;
  std::vector<Point> s_escapes;
  std::vector<Point> t_escapes;

  bool passed() const { return s_closed && t_closed; }
};

/// Applies S and T to a lattice-plus-random sample and records any point
/// whose image escapes its target set.
ClosureReport check_closure(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed);

/// min over sampled distinct pairs of ||d(Tx,Ty)|| / ||d(x,y)||. Strictly
/// positive for an injective T on a compact domain.
Real injectivity_separation(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed);

}  // namespace conefix
