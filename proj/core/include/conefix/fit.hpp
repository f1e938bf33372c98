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
#include <vector>

#include "conefix/constraints.hpp"
#include "conefix/corpus.hpp"

namespace conefix {

/// Minimiser of a + 2b over the sampled feasible (a, b) region.
///
/// When infeasible, argmin and objective are +infinity and
/// active_constraints holds the degenerate constraint that caused it.
struct FitResult
{
  bool                        feasible = false;
  ABPair                      argmin;
  Real                        objective = 0;
  std::vector<PairConstraint> active_constraints;
  std::size_t                 samples_used = 0;
  std::uint64_t               seed         = 0;
};

/// Solves  min a + 2b  s.t.  a A_i + b B_i >= L_i,  a, b >= 0
/// over every retained constraint coordinate, by enumerating the vertices
/// of the feasible region.
FitResult fit_min_ab(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed);

FitResult fit_min_ab(const ConstraintSet &set);

}  // namespace conefix
