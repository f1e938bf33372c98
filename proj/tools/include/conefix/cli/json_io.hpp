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

#include <nlohmann/json.hpp>

#include "conefix/certify.hpp"
#include "conefix/cone_metric_space.hpp"
#include "conefix/fit.hpp"
#include "conefix/fixed_point_checks.hpp"
#include "conefix/picard.hpp"
#include "conefix/cli/report_all.hpp"
#include "conefix/cli/run_config.hpp"

namespace conefix {

// Reals are written as the nearest double; non-finite values as null.
void to_json(nlohmann::json &j, const EVector &v);
void to_json(nlohmann::json &j, const Point &p);
void to_json(nlohmann::json &j, const ABPair &ab);
void to_json(nlohmann::json &j, const AxiomReport &r);
void to_json(nlohmann::json &j, const PairConstraint &c);
void to_json(nlohmann::json &j, const Witness &w);
void to_json(nlohmann::json &j, const Certificate &c);
void to_json(nlohmann::json &j, const FitResult &f);
void to_json(nlohmann::json &j, const IterationTrace &t);
void to_json(nlohmann::json &j, const FixedPointResult &r);
void to_json(nlohmann::json &j, const RateReport &r);
void to_json(nlohmann::json &j, const UniquenessReport &r);
void to_json(nlohmann::json &j, const DiagnosticsReport &r);

void from_json(const nlohmann::json &j, EVector &v);
void from_json(const nlohmann::json &j, Point &p);
void from_json(const nlohmann::json &j, ABPair &ab);
void from_json(const nlohmann::json &j, PairConstraint &c);
void from_json(const nlohmann::json &j, Witness &w);
void from_json(const nlohmann::json &j, Certificate &c);
void from_json(const nlohmann::json &j, FitResult &f);

}  // namespace conefix

namespace conefix::cli {

void to_json(nlohmann::json &j, const RunConfig &c);
void from_json(const nlohmann::json &j, RunConfig &c);
void to_json(nlohmann::json &j, const ReportRow &r);
void to_json(nlohmann::json &j, const AggregateReport &r);

/// Specimen labels, domains and declared properties.
nlohmann::json manifest_json();

}  // namespace conefix::cli
