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

#include "conefix/cli/json_io.hpp"

#include <limits>

namespace conefix {

using nlohmann::json;

namespace {

json real_json(const Real &r)
{
  return is_finite(r) ? json(to_double(r)) : json(nullptr);
}

Real real_from(const json &j)
{
  return j.is_null() ? std::numeric_limits<Real>::infinity() : Real(j.get<double>());
}

json reals_json(const std::vector<Real> &v)
{
  json arr = json::array();
  for (const auto &r : v)
  {
    arr.push_back(real_json(r));
  }
  return arr;
}

template <typename T>
json list_json(const std::vector<T> &items)
{
  json arr = json::array();
  for (const auto &item : items)
  {
    arr.push_back(item);
  }
  return arr;
}

json axiom_json(const AxiomResult &r)
{
  return {{"name", r.name}, {"passed", r.passed}, {"worst_violation", real_json(r.worst_violation)},
          {"witness", list_json(r.witness)}};
}

}  // namespace

void to_json(json &j, const EVector &v)
{
  j = reals_json({v.begin(), v.end()});
}

void from_json(const json &j, EVector &v)
{
  std::vector<Real> coords;
  for (const auto &c : j)
  {
    coords.push_back(real_from(c));
  }
  v = EVector(std::move(coords));
}

void to_json(json &j, const Point &p)
{
  j = p.dim() == 1 ? real_json(p.value()) : reals_json(p.coords());
}

void from_json(const json &j, Point &p)
{
  if (j.is_array())
  {
    std::vector<Real> coords;
    for (const auto &c : j)
    {
      coords.push_back(real_from(c));
    }
    p = Point(std::move(coords));
  }
  else
  {
    p = Point(real_from(j));
  }
}

void to_json(json &j, const ABPair &ab)
{
  j = {{"a", real_json(ab.a)}, {"b", real_json(ab.b)}};
}

void from_json(const json &j, ABPair &ab)
{
  ab.a = real_from(j.at("a"));
  ab.b = real_from(j.at("b"));
}

void to_json(json &j, const AxiomReport &r)
{
  j = {{"positivity", axiom_json(r.positivity)},
       {"symmetry", axiom_json(r.symmetry)},
       {"triangle", axiom_json(r.triangle)},
       {"all_passed", r.all_passed()},
       {"samples_used", r.samples_used},
       {"seed", r.seed}};
}

void to_json(json &j, const PairConstraint &c)
{
  j = {{"L", c.lhs}, {"A", c.a_term}, {"B", c.b_term}, {"witness", json::array({c.x, c.y})}};
}

void from_json(const json &j, PairConstraint &c)
{
  c.lhs    = j.at("L").get<EVector>();
  c.a_term = j.at("A").get<EVector>();
  c.b_term = j.at("B").get<EVector>();
  c.x      = j.at("witness").at(0).get<Point>();
  c.y      = j.at("witness").at(1).get<Point>();
}

void to_json(json &j, const Witness &w)
{
  j = {{"x", w.x}, {"y", w.y}, {"residual", real_json(w.residual)}, {"residual_vector", w.residual_vector}};
}

void from_json(const json &j, Witness &w)
{
  w.x               = j.at("x").get<Point>();
  w.y               = j.at("y").get<Point>();
  w.residual        = real_from(j.at("residual"));
  w.residual_vector = j.at("residual_vector").get<EVector>();
}

void to_json(json &j, const Certificate &c)
{
  j = {{"status", to_string(c.status)},
       {"ab", c.ab},
       {"worst_residual", real_json(c.worst_residual)},
       {"witnesses", list_json(c.witnesses)},
       {"samples_used", c.samples_used},
       {"seed", c.seed}};
}

void from_json(const json &j, Certificate &c)
{
  c.status         = j.at("status").get<std::string>() == "Satisfied" ? CertificateStatus::Satisfied
                                                                       : CertificateStatus::Violated;
  c.ab             = j.at("ab").get<ABPair>();
  c.worst_residual = real_from(j.at("worst_residual"));
  c.witnesses      = j.at("witnesses").get<std::vector<Witness>>();
  c.samples_used   = j.at("samples_used").get<std::size_t>();
  c.seed           = j.at("seed").get<std::uint64_t>();
}

void to_json(json &j, const FitResult &f)
{
  j = {{"feasible", f.feasible},
       {"argmin", f.feasible ? json(f.argmin) : json(nullptr)},
       {"objective", real_json(f.objective)},
       {"active_constraints", list_json(f.active_constraints)},
       {"samples_used", f.samples_used},
       {"seed", f.seed}};
}

void from_json(const json &j, FitResult &f)
{
  const Real inf       = std::numeric_limits<Real>::infinity();
  f.feasible           = j.at("feasible").get<bool>();
  f.argmin             = j.at("argmin").is_null() ? ABPair{inf, inf} : j.at("argmin").get<ABPair>();
  f.objective          = real_from(j.at("objective"));
  f.active_constraints = j.at("active_constraints").get<std::vector<PairConstraint>>();
  f.samples_used       = j.at("samples_used").get<std::size_t>();
  f.seed               = j.at("seed").get<std::uint64_t>();
}

void to_json(json &j, const IterationTrace &t)
{
  j = {{"space", t.space.label()},
       {"x0", t.x0},
       {"iterates", list_json(t.iterates)},
       {"step_dists", list_json(t.step_dists)},
       {"step_norms", reals_json(t.step_norms)},
       {"lambda", real_json(t.lambda)},
       {"a_priori_bound", reals_json(t.a_priori_bound)},
       {"status", to_string(t.status)},
       {"point_convergence_caveat", t.point_convergence_caveat}};
}

void to_json(json &j, const FixedPointResult &r)
{
  j = {{"point", r.point}, {"residual", real_json(r.residual)}, {"iterations", r.iterations}, {"trace", r.trace}};
}

void to_json(json &j, const RateReport &r)
{
  j = {{"passed", r.passed},
       {"max_relative_excess", real_json(r.max_relative_excess)},
       {"violation_index", r.violation_index ? json(*r.violation_index) : json(nullptr)},
       {"cauchy_passed", r.cauchy_passed},
       {"cauchy_pairs_checked", r.cauchy_pairs_checked},
       {"cauchy_violation",
        r.cauchy_violation ? json::array({r.cauchy_violation->first, r.cauchy_violation->second}) : json(nullptr)},
       {"ratios", reals_json(r.ratios)}};
}

void to_json(json &j, const UniquenessReport &r)
{
  json points = json::array();
  json iters  = json::array();
  for (const auto &res : r.results)
  {
    points.push_back(res.point);
    iters.push_back(res.iterations);
  }
  j = {{"passed", r.passed},
       {"seeds", list_json(r.seeds)},
       {"points", points},
       {"iterations", iters},
       {"max_pairwise_distance", real_json(r.max_pairwise_distance)},
       {"tol", real_json(r.tol)}};
}

namespace {

json sequence_json(const SequenceCheck &s)
{
  return {{"values", reals_json(s.values)},
          {"eventually_decreasing", s.eventually_decreasing},
          {"final_value", real_json(s.final_value)},
          {"passed", s.passed}};
}

}  // namespace

void to_json(json &j, const DiagnosticsReport &r)
{
  j = {{"p", r.p},
       {"displacement", sequence_json(r.displacement)},
       {"displacement_bound_holds", r.displacement_bound_holds},
       {"fixed_point_residual", real_json(r.fixed_point_residual)},
       {"fixed_point_residual_vector", r.fixed_point_residual_vector},
       {"fixed_point_check", r.fixed_point_check},
       {"continuity", sequence_json(r.continuity)},
       {"passed", r.passed()}};
}

}  // namespace conefix

namespace conefix::cli {

using nlohmann::json;

namespace {

template <typename E, std::size_t N>
E enum_from(const std::string &s, const E (&values)[N])
{
  for (auto v : values)
  {
    if (to_string(v) == s)
    {
      return v;
    }
  }
  throw std::invalid_argument("unknown value '" + s + "'");
}

constexpr Command kCommands[] = {Command::Axioms,      Command::Certify,   Command::Fit,
                                 Command::Solve,       Command::Uniqueness, Command::Diagnostics,
                                 Command::ReportAll,   Command::Manifest};
constexpr Format  kFormats[]  = {Format::Human, Format::Json, Format::Csv};

template <typename T>
json optional_json(const std::optional<T> &v)
{
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json &j)
{
  return j.is_null() ? std::nullopt : std::optional<T>(j.get<T>());
}

}  // namespace

void to_json(json &j, const RunConfig &c)
{
  j = {{"command", to_string(c.command)},
       {"specimen", c.specimen},
       {"a", optional_json(c.a)},
       {"b", optional_json(c.b)},
       {"x0", optional_json(c.x0)},
       {"tol", c.tol},
       {"samples", c.samples},
       {"seed", c.seed},
       {"output", c.output},
       {"format", to_string(c.format)},
       {"use_fit", c.use_fit},
       {"seeds", c.seeds},
       {"p", optional_json(c.p)},
       {"max_iter", c.max_iter}};
}

void from_json(const json &j, RunConfig &c)
{
  c.command  = enum_from(j.at("command").get<std::string>(), kCommands);
  c.specimen = j.at("specimen").get<std::string>();
  c.a        = optional_from<double>(j.at("a"));
  c.b        = optional_from<double>(j.at("b"));
  c.x0       = optional_from<double>(j.at("x0"));
  c.tol      = j.at("tol").get<double>();
  c.samples  = j.at("samples").get<std::size_t>();
  c.seed     = j.at("seed").get<std::uint64_t>();
  c.output   = j.at("output").get<std::string>();
  c.format   = enum_from(j.at("format").get<std::string>(), kFormats);
  c.use_fit  = j.at("use_fit").get<bool>();
  c.seeds    = j.at("seeds").get<std::vector<double>>();
  c.p        = optional_from<double>(j.at("p"));
  c.max_iter = j.at("max_iter").get<std::size_t>();
}

void to_json(json &j, const ReportRow &r)
{
  j = {{"label", r.label},
       {"t_identity", r.t_identity},
       {"regime", to_string(r.regime)},
       {"e_dim", r.e_dim},
       {"source", r.source},
       {"fit", r.fit},
       {"member_ab", optional_json(r.member_ab)},
       {"member_status", r.member_status ? json(to_string(*r.member_status)) : json(nullptr)},
       {"probe_ab", optional_json(r.probe_ab)},
       {"probe_status", r.probe_status ? json(to_string(*r.probe_status)) : json(nullptr)},
       {"fixed_point", optional_json(r.fixed_point)},
       {"iterations", optional_json(r.iterations)},
       {"unique", optional_json(r.unique)},
       {"expected_violation", r.expected_violation},
       {"pass", r.pass},
       {"failures", r.failures},
       {"line", r.line()}};
}

void to_json(json &j, const AggregateReport &r)
{
  json table = json::object();
  for (const auto &row : r.rows)
  {
    table[row.t_identity ? "T=id" : "T!=id"][std::string(to_string(row.regime))].push_back(
        row.label + (row.pass ? ":PASS" : ":FAIL"));
  }
  j = {{"seed", r.seed},
       {"samples", r.samples},
       {"tol", r.tol},
       {"rows", r.rows},
       {"table", table},
       {"all_passed", r.all_passed()}};
}

json manifest_json()
{
  json arr = json::array();
  for (const auto &e : corpus())
  {
    const auto &p = e.pair;
    const auto &d = p.declared();
    arr.push_back({{"label", p.label()},
                   {"domain", p.domain().to_string()},
                   {"t_range", p.t_range().to_string()},
                   {"e_dim", p.space().e_dim()},
                   {"regime", to_string(e.regime)},
                   {"source", e.source},
                   {"expected_region", e.expected.feasible_ab},
                   {"declared",
                    {{"t_injective", d.t_injective},
                     {"t_continuous", d.t_continuous},
                     {"t_sequentially_convergent", d.t_sequentially_convergent},
                     {"t_subsequentially_convergent", d.t_subsequentially_convergent},
                     {"s_continuous", d.s_continuous},
                     {"t_is_identity", d.t_is_identity}}}});
  }
  return arr;
}

}  // namespace conefix::cli
