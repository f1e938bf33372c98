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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conefix/mapping_pair.hpp"

namespace conefix {

struct ABPair
{
  Real a = 0;
  Real b = 0;

  friend bool operator==(const ABPair &, const ABPair &) = default;
};

/// Which column of the classical-results table a specimen exercises.
enum class Regime
{
  General,  ///< a, b >= 0 (Nova / Khan-Samanipour type)
  AZero,    ///< a = 0, b in [0, 1/2)  (Kannan type)
  BZero,    ///< b = 0, a < 1          (Banach / T-contraction type)
};

std::string_view to_string(Regime regime);

/// What the corpus claims about a specimen.
struct ExpectedOutcome
{
  /// Human-readable description of the feasible (a, b) region.
  std::string feasible_ab;
  /// Constants the specimen is expected to satisfy (certify -> Satisfied).
  std::optional<ABPair> member_of;
  /// Constants the specimen is expected to violate (certify -> Violated).
  std::optional<ABPair> violated_at;
  /// No (a, b) with a + 2b < 1 works; the fixed point theorem does not apply.
  bool theorem_inapplicable = false;
  std::optional<Real> fixed_point;
  std::optional<Real> min_a_plus_2b;
};

struct CorpusEntry
{
  MappingPair     pair;
  Regime          regime;
  ExpectedOutcome expected;
  /// Starting point used by report runs.
  Point default_x0;
  /// Classical result the entry instantiates.
  std::string source;
};

/// All specimens, in label order. Built once; immutable.
const std::vector<CorpusEntry> &corpus();

std::vector<std::string> corpus_labels();

/// Entry by label, or nullptr.
const CorpusEntry *find_entry(std::string_view label);

}  // namespace conefix
