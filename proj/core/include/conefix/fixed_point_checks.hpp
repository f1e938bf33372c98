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

#include "conefix/picard.hpp"

namespace conefix {

struct UniquenessReport
{
  bool                          passed = false;
  std::vector<Point>            seeds;
  std::vector<FixedPointResult> results;
  /// max over result pairs of ||d(p_i, p_j)||.
  Real max_pairwise_distance = 0;
  Real tol                   = 0;
};

/// Runs picard_solve from every seed; passes iff all returned points agree
/// within 10 * tol. A failing solve is rethrown as SolveError naming the seed.
UniquenessReport verify_uniqueness(const MappingPair &pair, const Real &a, const Real &b,
                                   const std::vector<Point> &seeds, const Real &tol,
                                   std::size_t max_iter = 1000);

struct SequenceCheck
{
  std::vector<Real> values;
  bool              eventually_decreasing = false;
  Real              final_value = 0;
  bool              passed = false;
};

struct DiagnosticsReport
{
  Point p;
  /// ||d(Tx_k, TSx_k)|| along the approach sequence.
  SequenceCheck displacement;
  /// (1 - b) d(Tx_k, TSx_k) <= (1 + a) d(Tx_k, Tp) on every sample, when p is fixed.
  bool displacement_bound_holds = true;
  /// ||d(Sp, p)|| and its vector.
  Real    fixed_point_residual = 0;
  EVector fixed_point_residual_vector;
  bool    fixed_point_check = false;
  /// ||d(TSx_k, TSp)|| along the approach sequence.
  SequenceCheck continuity;

  bool passed() const { return displacement.passed && fixed_point_check && continuity.passed; }
};

/// Checks along a caller-supplied sequence x_k -> p that the displacement
/// d(Tx_k, TSx_k) vanishes, that p is then fixed, and that TSx_k -> TSp.
/// A sequence check passes when the second half of its values is
/// non-increasing and the last value is at most tol.
DiagnosticsReport continuity_diagnostics(const MappingPair &pair, const Real &a, const Real &b,
                                         const Point &p, const std::vector<Point> &approach,
                                         const Real &tol = Real(1e-10));

/// p -/+ 2^-k for k = 1..count, stepping to the other side (then clamping)
/// when a candidate leaves the domain.
std::vector<Point> dyadic_approach(const PointDomain &domain, const Point &p, std::size_t count = 40);

}  // namespace conefix
