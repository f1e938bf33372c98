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

#include <iosfwd>
#include <string>
#include <vector>

#include "conefix/cli/run_config.hpp"
#include "conefix/picard.hpp"

namespace conefix::cli {

/// Executes one command and writes its report to config.output (or `out`).
/// Diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv (CONEFIX_SEED overrides the default seed) and runs it.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// `n,x_n,step_norm,a_priori_bound,ratio`, 17 significant digits.
std::string trace_csv(const IterationTrace &trace);

}  // namespace conefix::cli
