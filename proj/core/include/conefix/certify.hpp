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
#include <string_view>
#include <vector>

#include "conefix/constraints.hpp"
#include "conefix/corpus.hpp"

namespace conefix {

enum class CertificateStatus
{
  Satisfied,
  Violated
};

std::string_view to_string(CertificateStatus status);

struct Witness
{
  Point   x;
  Point   y;
  Real    residual = 0;  ///< max_i (L_i - aA_i - bB_i) / max(1, |L_i|)
  EVector residual_vector;
};

inline constexpr std::size_t kMaxWitnesses = 10;

/// Outcome of testing one (a, b) against a sampled constraint set.
/// Satisfied iff worst_residual <= kOrderTol.
struct Certificate
{
  CertificateStatus    status = CertificateStatus::Satisfied;
  ABPair               ab;
  Real                 worst_residual = 0;
  std::vector<Witness> witnesses;  ///< violating pairs, largest residual first
  std::size_t          samples_used = 0;
  std::uint64_t        seed         = 0;
};

Certificate certify(const MappingPair &pair, const Real &a, const Real &b, std::size_t sample_count,
                    std::uint64_t seed);

/// Certification against an already built constraint set.
Certificate certify(const ConstraintSet &set, const Real &a, const Real &b);

}  // namespace conefix
