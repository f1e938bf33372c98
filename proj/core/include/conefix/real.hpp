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

#include <cstdio>
#include <string>

#include <boost/multiprecision/float128.hpp>

namespace conefix {

/// Scalar type for points and cone-metric values.
///
/// Iterates that approach a fixed point lose relative resolution in their
/// T-image gaps long before the gaps reach zero; 113-bit significands keep
/// step distances accurate to double precision over full Picard traces.
using Real = boost::multiprecision::float128;

inline double to_double(const Real &r) { return static_cast<double>(r); }

/// Shortest round-trip decimal form of the nearest double.
inline std::string format_real(const Real &r)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(r));
  return buf;
}

inline bool is_finite(const Real &r) { return boost::multiprecision::isfinite(r); }

}  // namespace conefix
