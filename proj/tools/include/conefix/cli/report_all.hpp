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
#include <optional>
#include <string>
#include <vector>

#include "conefix/certify.hpp"
#include "conefix/corpus.hpp"
#include "conefix/fit.hpp"

namespace conefix::cli {

/// One specimen's line in the aggregate table.
struct ReportRow
{
  std::string label;
  bool        t_identity = false;
  Regime      regime     = Regime::General;
  std::size_t e_dim      = 1;
  std::string source;

  FitResult fit;

  std::optional<ABPair>            member_ab;
  std::optional<CertificateStatus> member_status;
  std::optional<ABPair>            probe_ab;
  std::optional<CertificateStatus> probe_status;

  std::optional<Point>       fixed_point;
  std::optional<std::size_t> iterations;
  std::optional<bool>        unique;

  bool                     expected_violation = false;
  bool                     pass               = false;
  std::vector<std::string> failures;

  /// "E2 | T≠id | (a,b)=(0.5,0) | fixed point 1.0 | PASS"
  std::string line() const;
};

struct AggregateReport
{
  std::uint64_t          seed    = 0;
  std::size_t            samples = 0;
  double                 tol     = 0;
  std::vector<ReportRow> rows;  ///< sorted by label

  bool all_passed() const;
};

/// Fits, certifies and (where the theorem applies) solves every corpus
/// entry, comparing each against its expected outcome.
AggregateReport report_all(std::uint64_t seed, std::size_t samples, double tol);

}  // namespace conefix::cli
