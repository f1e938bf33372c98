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
#include <string>
#include <utility>
#include <vector>

#include "conefix/evector.hpp"
#include "conefix/mapping_pair.hpp"

namespace conefix {

/// Tolerance for the cone-order inequality L <= aA + bB, applied per
/// coordinate and scaled by |L_i| when that exceeds 1.
inline constexpr double kOrderTol = 1e-9;

/// One sampled instance of the class inequality
///   d(TSx,TSy) <= a d(Tx,Ty) + b [d(Tx,TSx) + d(Ty,TSy)].
struct PairConstraint
{
  EVector lhs;     ///< L = d(TSx, TSy)
  EVector a_term;  ///< A = d(Tx, Ty)
  EVector b_term;  ///< B = d(Tx, TSx) + d(Ty, TSy)
  Point   x;
  Point   y;

  /// Some coordinate has A_i = B_i = 0 < L_i: no (a, b) satisfies it.
  bool infeasible() const;
};

/// L - aA - bB.
EVector constraint_residual(const PairConstraint &c, const Real &a, const Real &b);

/// Coordinate tolerance scale max(1, |L_i|).
Real order_scale(const Real &lhs);

struct ConstraintSet
{
  std::string                 label;
  std::vector<PairConstraint> constraints;
  std::size_t                 pairs_sampled = 0;
  std::uint64_t               seed          = 0;
};

/// Deterministic pair sample of a domain, in this order:
///   1. near-coincident pairs anchored at the box corners (|x-y| = 1e-1 ... 1e-6),
///   2. all pairs of a uniform lattice,
///   3. near-coincident pairs around seeded random anchors,
///   4. seeded uniform pairs,
/// truncated to `count`.
std::vector<std::pair<Point, Point>> sample_pairs(const PointDomain &domain, std::size_t count,
                                                  std::uint64_t seed);

/// Evaluates the class inequality terms over sample_pairs(). Pairs with
/// x = y are skipped. The result is sorted canonically by (x, y).
ConstraintSet build_constraints(const MappingPair &pair, std::size_t sample_count,
                                std::uint64_t seed);

PairConstraint evaluate_constraint(const MappingPair &pair, const Point &x, const Point &y);

}  // namespace conefix
