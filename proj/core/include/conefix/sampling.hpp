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

#include <cstdint>
#include <random>

#include "conefix/point.hpp"
#include "conefix/real.hpp"

namespace conefix {

/// Deterministic sample source. Draws depend only on the seed and the order
/// of calls, independent of the standard library's distribution classes.
class SampleStream
{
public:
  explicit SampleStream(std::uint64_t seed)
    : engine_(seed)
  {}

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  Real uniform(const Real &lo, const Real &hi) { return lo + (hi - lo) * Real(unit()); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  Point point_in(const PointDomain &domain);

private:
  std::mt19937_64 engine_;
};

}  // namespace conefix
