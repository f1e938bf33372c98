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

#include "conefix/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <set>

#include "conefix/errors.hpp"

namespace conefix {
namespace {

/// alpha a + beta b >= 1, from one constraint coordinate normalised by L_i.
struct Row
{
  Real        alpha;
  Real        beta;
  std::size_t source;
};

using DedupKey = std::array<long long, 3>;

DedupKey dedup_key(const Real &A, const Real &B, const Real &L)
{
  const Real m = std::max({A, B, L});
  auto q = [&](const Real &v) { return static_cast<long long>(std::llround(to_double(v / m) * 1e12)); };
  return {q(A), q(B), q(L)};
}

Real cross(const Row &o, const Row &p, const Row &q)
{
  return (p.alpha - o.alpha) * (q.beta - o.beta) - (p.beta - o.beta) * (q.alpha - o.alpha);
}

/// Rows on the lower-left boundary of conv(rows) + R^2_+; the rest are implied.
/// Expects rows sorted by (alpha, beta).
std::vector<Row> binding_rows(const std::vector<Row> &rows)
{
  std::vector<Row> hull;
  for (const auto &r : rows)
  {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), r) <= 0)
    {
      hull.pop_back();
    }
    hull.push_back(r);
  }
  // Keep the strictly descending-beta prefix of the lower hull.
  std::size_t end = 1;
  while (end < hull.size() && hull[end].beta < hull[end - 1].beta)
  {
    ++end;
  }
  hull.resize(end);
  return hull;
}

struct Vertex
{
  Real a;
  Real b;
};

}  // namespace

FitResult fit_min_ab(const ConstraintSet &set)
{
  FitResult result;
  result.samples_used = set.pairs_sampled;
  result.seed         = set.seed;

  std::vector<Row>    rows;
  std::set<DedupKey>  seen;
  for (std::size_t k = 0; k < set.constraints.size(); ++k)
  {
    const auto &c = set.constraints[k];
    if (c.infeasible())
    {
      const Real inf       = std::numeric_limits<Real>::infinity();
      result.feasible      = false;
      result.argmin        = {inf, inf};
      result.objective     = inf;
      result.active_constraints = {c};
      return result;
    }
    for (std::size_t i = 0; i < c.lhs.size(); ++i)
    {
      const Real &L = c.lhs[i];
      const Real &A = c.a_term[i];
      const Real &B = c.b_term[i];
      if (!(L > 0) || (A == 0 && B == 0))
      {
        continue;
      }
      if (seen.insert(dedup_key(A, B, L)).second)
      {
        rows.push_back({A / L, B / L, k});
      }
    }
  }

  result.feasible = true;
  if (rows.empty())
  {
    result.argmin    = {0, 0};
    result.objective = 0;
    return result;
  }

  std::sort(rows.begin(), rows.end(), [](const Row &l, const Row &r) {
    return l.alpha != r.alpha ? l.alpha < r.alpha : l.beta < r.beta;
  });
  const auto binding = binding_rows(rows);

  std::vector<Vertex> candidates;
  for (const auto &r : binding)
  {
    if (r.beta > 0)
    {
      candidates.push_back({0, 1 / r.beta});
    }
    if (r.alpha > 0)
    {
      candidates.push_back({1 / r.alpha, 0});
    }
  }
  for (std::size_t i = 0; i < binding.size(); ++i)
  {
    for (std::size_t j = i + 1; j < binding.size(); ++j)
    {
      const Row &p   = binding[i];
      const Row &q   = binding[j];
      const Real det = p.alpha * q.beta - q.alpha * p.beta;
      if (det == 0)
      {
        continue;
      }
      Real a = (q.beta - p.beta) / det;
      Real b = (p.alpha - q.alpha) / det;
      // Rounding leaves axis vertices a hair off the axis.
      if (abs(a) <= Real(1e-24))
      {
        a = 0;
      }
      if (abs(b) <= Real(1e-24))
      {
        b = 0;
      }
      if (a >= 0 && b >= 0)
      {
        candidates.push_back({a, b});
      }
    }
  }

  const Real slack(1e-24);
  auto feasible = [&](const Vertex &v) {
    return std::all_of(binding.begin(), binding.end(),
                       [&](const Row &r) { return r.alpha * v.a + r.beta * v.b >= 1 - slack; });
  };

  std::optional<Vertex> best;
  Real                  best_obj = std::numeric_limits<Real>::infinity();
  for (const auto &v : candidates)
  {
    if (!feasible(v))
    {
      continue;
    }
    const Real obj = v.a + 2 * v.b;
    const Real tie = slack * std::max(Real(1), best_obj);
    const bool same_a = best && abs(v.a - best->a) <= tie;
    if (!best || obj < best_obj - tie ||
        (abs(obj - best_obj) <= tie && ((!same_a && v.a < best->a) || (same_a && v.b < best->b))))
    {
      best     = v;
      best_obj = obj;
    }
  }

  if (!best)
  {
    throw Error("vertex enumeration found no feasible vertex for '" + set.label + "'");
  }
  result.argmin    = {best->a, best->b};
  result.objective = best_obj;

  constexpr std::size_t kMaxActive = 16;
  std::set<std::size_t> active;
  for (const auto &r : rows)
  {
    if (abs(r.alpha * best->a + r.beta * best->b - 1) <= Real(kOrderTol) && active.size() < kMaxActive)
    {
      active.insert(r.source);
    }
  }
  for (auto k : active)
  {
    result.active_constraints.push_back(set.constraints[k]);
  }
  return result;
}

FitResult fit_min_ab(const MappingPair &pair, std::size_t sample_count, std::uint64_t seed)
{
  return fit_min_ab(build_constraints(pair, sample_count, seed));
}

}  // namespace conefix
