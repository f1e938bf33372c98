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
#include <string_view>
#include <vector>

namespace conefix::cli {

enum class Command
{
  Axioms,
  Certify,
  Fit,
  Solve,
  Uniqueness,
  Diagnostics,
  ReportAll,
  Manifest,
};

enum class Format
{
  Human,
  Json,
  Csv,
};

std::string_view to_string(Command command);
std::string_view to_string(Format format);

inline constexpr std::uint64_t kDefaultSeed    = 42;
inline constexpr std::size_t   kDefaultSamples = 2000;
inline constexpr double        kDefaultTol     = 1e-10;

struct RunConfig
{
  Command               command = Command::ReportAll;
  std::string           specimen;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> x0;
  double                tol     = kDefaultTol;
  std::size_t           samples = kDefaultSamples;
  std::uint64_t         seed    = kDefaultSeed;
  /// Empty means stdout.
  std::string output;
  Format      format = Format::Human;

  /// Take (a, b) from fit_min_ab instead of --a/--b.
  bool use_fit = false;
  /// Starting points for `uniqueness`; empty selects a default spread.
  std::vector<double> seeds;
  /// Limit point for `diagnostics`; defaults to the expected fixed point.
  std::optional<double> p;
  std::size_t           max_iter = 1000;
};

/// Exit codes: 0 pass / converged, 1 violation / non-convergence, 2 usage error.
enum ExitCode : int
{
  kExitPass  = 0,
  kExitFail  = 1,
  kExitUsage = 2,
};

}  // namespace conefix::cli
