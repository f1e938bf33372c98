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

#include "conefix/corpus.hpp"

#include <algorithm>

namespace conefix {

std::string_view to_string(Regime regime)
{
  switch (regime)
  {
  case Regime::General:
    return "a,b>=0";
  case Regime::AZero:
    return "a=0, b<1/2";
  case Regime::BZero:
    return "b=0, a<1";
  }
  return "?";
}

namespace {

Point identity(const Point &x)
{
  return x;
}

Point root(const Point &x)
{
  return Point(sqrt(x.value()));
}

Point natural_log(const Point &x)
{
  return Point(log(x.value()));
}

DeclaredProperties identity_t()
{
  DeclaredProperties d;
  d.t_is_identity = true;
  return d;
}

DeclaredProperties discontinuous_s(DeclaredProperties d)
{
  d.s_continuous = false;
  return d;
}

std::vector<CorpusEntry> build_corpus()
{
  const Real half(0.5);
  const Real ln_half = log(half);
  const auto unit    = PointDomain::interval(0, 1);
  const auto upper   = PointDomain::interval(half, 1);
  const auto ln_upper = PointDomain::interval(ln_half, 0);

  std::vector<CorpusEntry> entries;

  // S = sqrt, T = 2x on [0,1]: the pair (0, 1) alone forces a >= 1.
  entries.push_back(
      {MappingPair("E1", exp_weighted_space("E1", unit), root, [](const Point &x) { return Point(2 * x.value()); },
                   DeclaredProperties{}, PointDomain::interval(0, 2)),
       Regime::General,
       {.feasible_ab          = "empty for a + 2b < 1",
        .violated_at          = ABPair{Real(0.5), Real(0.2)},
        .theorem_inapplicable = true},
       Point(0.5),
       "S = sqrt(x), T = alpha x with alpha = 2 (not of class D_T(a,b))"});

  // S = sqrt, T = ln on [1/2, 1]: |ln Sx - ln Sy| = |ln x - ln y| / 2.
  entries.push_back({MappingPair("E2", exp_weighted_space("E2", upper), root, natural_log, DeclaredProperties{},
                                 ln_upper),
                     Regime::BZero,
                     {.feasible_ab   = "a + b/2 >= 1/2",
                      .member_of     = ABPair{half, 0},
                      .fixed_point   = Real(1),
                      .min_a_plus_2b = half},
                     Point(half),
                     "S = sqrt(x), T = ln x (in D_T(1/2, 0) though not in D(a,b))"});

  // S = id, T = sqrt on [0,1]: TS = T, so L = A and B = 0.
  entries.push_back({MappingPair("E3", exp_weighted_space("E3", unit), identity, root, DeclaredProperties{}),
                     Regime::General,
                     {.feasible_ab          = "a >= 1",
                      .violated_at          = ABPair{Real(0.99), 0},
                      .theorem_inapplicable = true,
                      .min_a_plus_2b        = Real(1)},
                     Point(half),
                     "S = id, T = sqrt(x) (in D(a,b) but not in D_T(a,b) for a < 1)"});

  entries.push_back({MappingPair("C-Banach", abs_metric_space("C-Banach", unit),
                                 [](const Point &x) { return Point(x.value() / 2); }, identity, identity_t()),
                     Regime::BZero,
                     {.feasible_ab   = "a >= 1/2",
                      .member_of     = ABPair{half, 0},
                      .fixed_point   = Real(0),
                      .min_a_plus_2b = half},
                     Point(1),
                     "Banach contraction on a complete metric space"});

  // Discontinuous at 1, so not a Banach contraction; Kannan with b = 1/3.
  entries.push_back({MappingPair("C-Kannan", abs_metric_space("C-Kannan", unit),
                                 [](const Point &x) { return x.value() < 1 ? Point(x.value() / 4) : Point(Real(1) / 8); },
                                 identity, discontinuous_s(identity_t())),
                     Regime::AZero,
                     {.feasible_ab   = "a + 3b/4 >= 1/4 and b >= 1/13 near the jump; Kannan with a = 0, b = 1/3",
                      .member_of     = ABPair{0, Real(1) / 3},
                      .fixed_point   = Real(0),
                      .min_a_plus_2b = Real(9) / 26},
                     Point(1),
                     "Kannan map on a complete metric space"});

  // Neither Banach (jump at 1) nor Kannan (slope 1/2 near 0); D(a,b) with a + 2b = 0.8.
  entries.push_back({MappingPair("C-Nova", abs_metric_space("C-Nova", unit),
                                 [](const Point &x) { return x.value() < 1 ? Point(x.value() / 2) : Point(Real(1) / 4); },
                                 identity, discontinuous_s(identity_t())),
                     Regime::General,
                     {.feasible_ab   = "a + b/2 >= 1/2 and b >= 1/5 near the jump",
                      .member_of     = ABPair{Real(0.4), Real(0.2)},
                      .fixed_point   = Real(0),
                      .min_a_plus_2b = Real(0.8)},
                     Point(1),
                     "Nova class D(a,b) on a complete metric space"});

  entries.push_back({MappingPair("C-R2", scaled_pair_space("C-R2", unit, Real(2)),
                                 [](const Point &x) { return Point(x.value() / 2); }, identity, identity_t()),
                     Regime::BZero,
                     {.feasible_ab   = "a >= 1/2",
                      .member_of     = ABPair{half, 0},
                      .fixed_point   = Real(0),
                      .min_a_plus_2b = half},
                     Point(1),
                     "contraction on the cone metric space d(x,y) = (|x-y|, 2|x-y|)"});

  // C-Kannan conjugated by T = ln: in u = -ln x, S acts as u/4 with a jump at u = ln 2.
  entries.push_back({MappingPair("C-TKannan", exp_weighted_space("C-TKannan", upper),
                                 [half](const Point &x) {
                                   return x.value() > half ? Point(pow(x.value(), Real(0.25)))
                                                           : Point(pow(half, Real(0.125)));
                                 },
                                 natural_log, discontinuous_s(DeclaredProperties{}), ln_upper),
                     Regime::AZero,
                     {.feasible_ab   = "a + 3b/4 >= 1/4 and b >= 1/13 near the jump; T-Kannan with a = 0, b = 1/3",
                      .member_of     = ABPair{0, Real(1) / 3},
                      .fixed_point   = Real(1),
                      .min_a_plus_2b = Real(9) / 26},
                     Point(half),
                     "T-Kannan map on a complete cone metric space, T = ln x"});

  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry &l, const CorpusEntry &r) { return l.pair.label() < r.pair.label(); });
  return entries;
}

}  // namespace

const std::vector<CorpusEntry> &corpus()
{
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

std::vector<std::string> corpus_labels()
{
  std::vector<std::string> labels;
  for (const auto &e : corpus())
  {
    labels.push_back(e.pair.label());
  }
  return labels;
}

const CorpusEntry *find_entry(std::string_view label)
{
  for (const auto &e : corpus())
  {
    if (e.pair.label() == label)
    {
      return &e;
    }
  }
  return nullptr;
}

}  // namespace conefix
