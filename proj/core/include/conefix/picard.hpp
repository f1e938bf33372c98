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
#include <optional>
#include <string_view>
#include <vector>

#include "conefix/cone_metric_space.hpp"
#include "conefix/mapping_pair.hpp"

namespace conefix {

enum class TraceStatus
{
  Converged,
  MaxIterations,
  Diverged
};

std::string_view to_string(TraceStatus status);

/// Record of a Picard run x_{n+1} = S x_n.
///
/// iterates.size() == step_dists.size() + 1. step_dists[n] is
/// d(Tx_n, Tx_{n+1}); a_priori_bound[n] = lambda^n / (1 - lambda) * step_norms[0].
struct IterationTrace
{
  /// Space the T-images are measured in; kept so the trace can re-measure itself.
  ConeMetricSpace      space;
  Point                x0;
  std::vector<Point>   iterates;
  std::vector<Point>   t_images;
  std::vector<EVector> step_dists;
  std::vector<Real>    step_norms;
  Real                 lambda = 0;
  std::vector<Real>    a_priori_bound;
  TraceStatus          status = TraceStatus::MaxIterations;
  /// The specimen does not declare T sequentially convergent, so only the
  /// convergence of (Tx_n) is established; the last iterate is reported as is.
  bool point_convergence_caveat = false;
};

struct FixedPointResult
{
  Point          point;
  Real           residual = 0;  ///< ||d(Sp, p)||
  std::size_t    iterations = 0;
  IterationTrace trace;
};

/// (a + b) / (1 - b).
Real contraction_ratio(const Real &a, const Real &b);

/// Iterates S from x0 until the a-posteriori bound
///   lambda / (1 - lambda) * ||d(Tx_n, Tx_{n+1})|| <= tol
/// holds and ||d(Sp, p)|| <= tol, or max_iter steps were taken. A step
/// norm above 10 * step_norms[0] stops the run as Diverged.
///
/// Throws PreconditionError unless a, b >= 0 and a + 2b < 1, tol > 0 and
/// x0 lies in the domain; DomainError if an iterate leaves the domain.
FixedPointResult picard_solve(const MappingPair &pair, const Real &a, const Real &b,
                              const Point &x0, const Real &tol, std::size_t max_iter = 1000);

inline constexpr double kRateSlack = 1e-9;

struct RateReport
{
  bool passed = true;
  /// max_n (step_norms[n] - lambda^n step_norms[0]) / (lambda^n step_norms[0]).
  Real max_relative_excess = 0;
  /// First n breaking the geometric bound.
  std::optional<std::size_t> violation_index;
  bool        cauchy_passed = true;
  std::size_t cauchy_pairs_checked = 0;
  /// First (m, n) breaking ||d(Tx_m, Tx_n)|| <= lambda^n / (1 - lambda) step_norms[0].
  std::optional<std::pair<std::size_t, std::size_t>> cauchy_violation;
  /// step_norms[n+1] / step_norms[n].
  std::vector<Real> ratios;
};

/// Checks step_norms[n] <= lambda^n step_norms[0] (1 + kRateSlack) and the
/// Cauchy tail bound, the latter recomputed from the stored T-images.
/// Throws PreconditionError for traces with fewer than two steps.
RateReport check_rate_bound(const IterationTrace &trace);

}  // namespace conefix
