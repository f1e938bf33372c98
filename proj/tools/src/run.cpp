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

#include "conefix/cli/run.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "conefix/certify.hpp"
#include "conefix/cli/json_io.hpp"
#include "conefix/cli/report_all.hpp"
#include "conefix/corpus.hpp"
#include "conefix/errors.hpp"
#include "conefix/fit.hpp"
#include "conefix/fixed_point_checks.hpp"
#include "conefix/picard.hpp"

namespace conefix::cli {

using nlohmann::json;

std::string_view to_string(Command command)
{
  switch (command)
  {
  case Command::Axioms:
    return "axioms";
  case Command::Certify:
    return "certify";
  case Command::Fit:
    return "fit";
  case Command::Solve:
    return "solve";
  case Command::Uniqueness:
    return "uniqueness";
  case Command::Diagnostics:
    return "diagnostics";
  case Command::ReportAll:
    return "report-all";
  case Command::Manifest:
    return "manifest";
  }
  return "unknown";
}

std::string_view to_string(Format format)
{
  switch (format)
  {
  case Format::Human:
    return "human";
  case Format::Json:
    return "json";
  case Format::Csv:
    return "csv";
  }
  return "unknown";
}

namespace {

// Bad flags or flag combinations; reported with exit code 2.
class UsageError : public Error
{
public:
  using Error::Error;
};

constexpr std::size_t kDefaultUniquenessSeeds = 5;

std::string num(const Real &r)
{
  return format_real(r);
}

std::string evec(const EVector &v)
{
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    out += (i ? ", " : "") + num(v[i]);
  }
  return out + "]";
}

std::string points(const std::vector<Point> &ps)
{
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i)
  {
    out += (i ? ", " : "") + ps[i].to_string();
  }
  return out;
}

struct Outcome
{
  std::string text;
  int         code = kExitPass;
};

const CorpusEntry &require_entry(const RunConfig &config)
{
  if (config.specimen.empty())
  {
    throw UsageError(std::string(to_string(config.command)) + " needs --specimen");
  }
  const auto *entry = find_entry(config.specimen);
  if (entry == nullptr)
  {
    std::string known;
    for (const auto &label : corpus_labels())
    {
      known += " " + label;
    }
    throw UsageError("unknown specimen '" + config.specimen + "'; available:" + known);
  }
  return *entry;
}

// (a, b) from the flags, or from the fit when --use-fit is given. An
// infeasible fit yields nullopt.
std::optional<ABPair> constants(const RunConfig &config, const MappingPair &pair)
{
  if (config.use_fit)
  {
    auto fit = fit_min_ab(pair, config.samples, config.seed);
    if (!fit.feasible)
    {
      return std::nullopt;
    }
    return fit.argmin;
  }
  if (!config.a || !config.b)
  {
    throw UsageError(std::string(to_string(config.command)) + " needs --a and --b (or --use-fit)");
  }
  return ABPair{Real(*config.a), Real(*config.b)};
}

Outcome no_feasible_fit(const RunConfig &config)
{
  Outcome o{"", kExitFail};
  if (config.format == Format::Json)
  {
    o.text = json{{"command", to_string(config.command)}, {"config", config}, {"error", "fit infeasible"}}.dump(2);
  }
  else
  {
    o.text = config.specimen + ": no feasible (a,b) for the sampled constraints";
  }
  return o;
}

json envelope(const RunConfig &config, json result)
{
  return {{"command", to_string(config.command)}, {"config", config}, {"result", std::move(result)}};
}

void require_not_csv(const RunConfig &config)
{
  if (config.format == Format::Csv)
  {
    throw UsageError("csv output is only available for solve traces");
  }
}

std::string axiom_line(const AxiomResult &r)
{
  std::string line = r.name + ": " + (r.passed ? "pass" : "FAIL") + "  worst " + num(r.worst_violation);
  if (!r.passed)
  {
    line += "  witness " + points(r.witness);
  }
  return line;
}

Outcome run_axioms(const RunConfig &config)
{
  require_not_csv(config);
  const auto &entry  = require_entry(config);
  auto        report = check_metric_axioms(entry.pair.space(), config.samples, config.seed);
  Outcome     o{"", report.all_passed() ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = envelope(config, report).dump(2);
    return o;
  }
  std::ostringstream s;
  s << "axioms for " << entry.pair.space().label() << " (" << report.samples_used << " samples, seed "
    << report.seed << ")\n"
    << "  " << axiom_line(report.positivity) << "\n"
    << "  " << axiom_line(report.symmetry) << "\n"
    << "  " << axiom_line(report.triangle);
  o.text = s.str();
  return o;
}

Outcome run_certify(const RunConfig &config)
{
  require_not_csv(config);
  const auto &entry = require_entry(config);
  auto        ab    = constants(config, entry.pair);
  if (!ab)
  {
    return no_feasible_fit(config);
  }
  auto    cert = certify(entry.pair, ab->a, ab->b, config.samples, config.seed);
  Outcome o{"", cert.status == CertificateStatus::Satisfied ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = envelope(config, cert).dump(2);
    return o;
  }
  std::ostringstream s;
  s << config.specimen << " at (a,b)=(" << num(ab->a) << ", " << num(ab->b) << "): " << to_string(cert.status)
    << "\n  worst residual " << num(cert.worst_residual) << " over " << cert.samples_used << " pairs";
  for (const auto &w : cert.witnesses)
  {
    s << "\n  x=" << w.x.to_string() << " y=" << w.y.to_string() << " residual " << num(w.residual);
  }
  o.text = s.str();
  return o;
}

Outcome run_fit(const RunConfig &config)
{
  require_not_csv(config);
  const auto &entry = require_entry(config);
  auto        fit   = fit_min_ab(entry.pair, config.samples, config.seed);
  bool        good  = fit.feasible && fit.objective < 1;
  Outcome     o{"", good ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = envelope(config, fit).dump(2);
    return o;
  }
  std::ostringstream s;
  if (!fit.feasible)
  {
    s << config.specimen << ": infeasible";
    for (const auto &c : fit.active_constraints)
    {
      s << "\n  x=" << c.x.to_string() << " y=" << c.y.to_string() << " L=" << evec(c.lhs)
        << " with A=B=0";
    }
  }
  else
  {
    s << config.specimen << ": min a+2b = " << num(fit.objective) << " at (a,b)=(" << num(fit.argmin.a) << ", "
      << num(fit.argmin.b) << ")" << (good ? "" : "  (no a+2b<1)");
    for (const auto &c : fit.active_constraints)
    {
      s << "\n  active x=" << c.x.to_string() << " y=" << c.y.to_string();
    }
  }
  o.text = s.str();
  return o;
}

Outcome run_solve(const RunConfig &config)
{
  const auto &entry = require_entry(config);
  auto        ab    = constants(config, entry.pair);
  if (!ab)
  {
    return no_feasible_fit(config);
  }
  Point   x0     = config.x0 ? Point(*config.x0) : entry.default_x0;
  auto    result = picard_solve(entry.pair, ab->a, ab->b, x0, Real(config.tol), config.max_iter);
  Outcome o{"", result.trace.status == TraceStatus::Converged ? kExitPass : kExitFail};

  if (config.format == Format::Csv)
  {
    o.text = trace_csv(result.trace);
    return o;
  }
  std::optional<RateReport> rate;
  if (result.trace.step_norms.size() >= 2)
  {
    rate = check_rate_bound(result.trace);
  }
  if (config.format == Format::Json)
  {
    json j = result;
    j["rate"] = rate ? json(*rate) : json(nullptr);
    o.text    = envelope(config, j).dump(2);
    return o;
  }
  std::ostringstream s;
  s << config.specimen << ": " << to_string(result.trace.status) << " after " << result.iterations
    << " iterations\n"
    << "  fixed point " << result.point.to_string() << "\n"
    << "  residual ||d(Sp,p)|| " << num(result.residual) << "\n"
    << "  lambda " << num(result.trace.lambda);
  if (rate)
  {
    s << "\n  rate bound " << (rate->passed ? "holds" : "broken") << ", Cauchy bound "
      << (rate->cauchy_passed ? "holds" : "broken");
  }
  if (result.trace.point_convergence_caveat)
  {
    s << "\n  note: T not declared sequentially convergent; only (Tx_n) is known to converge";
  }
  o.text = s.str();
  return o;
}

Outcome run_uniqueness(const RunConfig &config)
{
  require_not_csv(config);
  const auto &entry = require_entry(config);
  auto        ab    = constants(config, entry.pair);
  if (!ab)
  {
    return no_feasible_fit(config);
  }
  std::vector<Point> seeds;
  for (double v : config.seeds)
  {
    seeds.emplace_back(v);
  }
  if (seeds.empty())
  {
    seeds = entry.pair.domain().grid(kDefaultUniquenessSeeds);
  }
  auto report = verify_uniqueness(entry.pair, ab->a, ab->b, seeds, Real(config.tol), config.max_iter);
  Outcome o{"", report.passed ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = envelope(config, report).dump(2);
    return o;
  }
  std::ostringstream s;
  s << config.specimen << ": " << (report.passed ? "unique" : "NOT unique") << " over " << seeds.size()
    << " seeds, max pairwise distance " << num(report.max_pairwise_distance);
  for (std::size_t i = 0; i < report.results.size(); ++i)
  {
    s << "\n  " << seeds[i].to_string() << " -> " << report.results[i].point.to_string();
  }
  o.text = s.str();
  return o;
}

Outcome run_diagnostics(const RunConfig &config)
{
  require_not_csv(config);
  const auto &entry = require_entry(config);
  auto        ab    = constants(config, entry.pair);
  if (!ab)
  {
    return no_feasible_fit(config);
  }
  Point p;
  if (config.p)
  {
    p = Point(*config.p);
  }
  else if (entry.expected.fixed_point)
  {
    p = Point(*entry.expected.fixed_point);
  }
  else
  {
    throw UsageError("diagnostics for " + config.specimen + " needs --p");
  }
  auto approach = dyadic_approach(entry.pair.domain(), p);
  auto report   = continuity_diagnostics(entry.pair, ab->a, ab->b, p, approach, Real(config.tol));
  Outcome o{"", report.passed() ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = envelope(config, report).dump(2);
    return o;
  }
  auto seq = [](const SequenceCheck &c) {
    return std::string(c.passed ? "pass" : "FAIL") + " (final " + num(c.final_value) +
           (c.eventually_decreasing ? ", decreasing)" : ", not decreasing)");
  };
  std::ostringstream s;
  s << config.specimen << " diagnostics at p=" << p.to_string() << "\n"
    << "  displacement d(Tx_k,TSx_k) -> 0: " << seq(report.displacement) << "\n"
    << "  displacement bound: " << (report.displacement_bound_holds ? "holds" : "broken") << "\n"
    << "  fixed point ||d(Sp,p)|| = " << num(report.fixed_point_residual) << ": "
    << (report.fixed_point_check ? "pass" : "FAIL") << "\n"
    << "  continuity d(TSx_k,TSp) -> 0: " << seq(report.continuity);
  o.text = s.str();
  return o;
}

std::string matrix_text(const AggregateReport &report)
{
  // column per regime, row per T kind
  const Regime regimes[] = {Regime::General, Regime::AZero, Regime::BZero};
  std::map<std::pair<bool, Regime>, std::string> cells;
  for (const auto &row : report.rows)
  {
    auto &cell = cells[{row.t_identity, row.regime}];
    cell += (cell.empty() ? "" : " ") + row.label + (row.pass ? "" : "(FAIL)");
  }
  std::ostringstream s;
  s << "\n" << std::left;
  s << "        ";
  for (auto r : regimes)
  {
    s << " | " << to_string(r);
  }
  for (bool id : {true, false})
  {
    s << "\n" << (id ? "T=id   " : "T≠id   ") << " ";
    for (auto r : regimes)
    {
      auto it = cells.find({id, r});
      s << " | " << (it == cells.end() ? "-" : it->second);
    }
  }
  return s.str();
}

Outcome run_report_all(const RunConfig &config)
{
  require_not_csv(config);
  auto    report = report_all(config.seed, config.samples, config.tol);
  Outcome o{"", report.all_passed() ? kExitPass : kExitFail};
  if (config.format == Format::Json)
  {
    o.text = json(report).dump(2);
    return o;
  }
  std::ostringstream s;
  for (const auto &row : report.rows)
  {
    s << row.line() << "\n";
    for (const auto &f : row.failures)
    {
      s << "    " << f << "\n";
    }
  }
  s << matrix_text(report);
  o.text = s.str();
  return o;
}

Outcome run_manifest(const RunConfig &config)
{
  require_not_csv(config);
  auto m = manifest_json();
  if (config.format == Format::Json)
  {
    return {m.dump(2), kExitPass};
  }
  std::ostringstream s;
  for (std::size_t i = 0; i < m.size(); ++i)
  {
    const auto &e = m[i];
    s << (i ? "\n" : "") << e["label"].get<std::string>() << "  M=" << e["domain"].get<std::string>()
      << "  E dim " << e["e_dim"].get<std::size_t>() << "  " << e["regime"].get<std::string>() << "  "
      << e["expected_region"].get<std::string>();
  }
  return {s.str(), kExitPass};
}

Outcome dispatch(const RunConfig &config)
{
  switch (config.command)
  {
  case Command::Axioms:
    return run_axioms(config);
  case Command::Certify:
    return run_certify(config);
  case Command::Fit:
    return run_fit(config);
  case Command::Solve:
    return run_solve(config);
  case Command::Uniqueness:
    return run_uniqueness(config);
  case Command::Diagnostics:
    return run_diagnostics(config);
  case Command::ReportAll:
    return run_report_all(config);
  case Command::Manifest:
    return run_manifest(config);
  }
  throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
  if (config.samples == 0 || !(config.tol > 0))
  {
    err << "error: --samples and --tol must be positive\n";
    return kExitUsage;
  }

  Outcome outcome;
  try
  {
    outcome = dispatch(config);
  }
  catch (const UsageError &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const PreconditionError &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const DomainError &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const DimensionMismatch &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const Error &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  if (!outcome.text.empty() && outcome.text.back() != '\n')
  {
    outcome.text += '\n';
  }
  if (config.output.empty())
  {
    out << outcome.text;
    return outcome.code;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!(file << outcome.text))
  {
    err << "error: cannot write " << config.output << "\n";
    return kExitUsage;
  }
  return outcome.code;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  RunConfig config;

  CLI::App app{"Cone metric fixed point toolkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto *seed_opt = app.add_option("--seed", config.seed, "Sampling seed (env CONEFIX_SEED)");
  app.add_option("--specimen", config.specimen, "Corpus label");
  app.add_option("--a", config.a, "Constant a");
  app.add_option("--b", config.b, "Constant b");
  app.add_option("--x0", config.x0, "Starting point");
  app.add_option("--tol", config.tol, "Stopping tolerance");
  app.add_option("--samples", config.samples, "Pair / triple sample budget");
  app.add_option("--output,-o", config.output, "Write the report here instead of stdout");
  std::string format_name = "human";
  app.add_option("--format", format_name, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}, CLI::ignore_case));
  app.add_flag("--use-fit", config.use_fit, "Take (a,b) from the fit");
  app.add_option("--seeds", config.seeds, "Starting points for uniqueness")->delimiter(',');
  app.add_option("--p", config.p, "Limit point for diagnostics");
  app.add_option("--max-iter", config.max_iter, "Iteration cap");

  const std::pair<Command, const char *> commands[] = {
      {Command::Axioms, "Check the cone metric axioms on samples"},
      {Command::Certify, "Test class membership for given (a,b)"},
      {Command::Fit, "Minimise a+2b over the sampled constraints"},
      {Command::Solve, "Run the Picard iteration"},
      {Command::Uniqueness, "Solve from several seeds and compare"},
      {Command::Diagnostics, "Continuity and fixed point checks near p"},
      {Command::ReportAll, "Run the whole corpus"},
      {Command::Manifest, "List the corpus"},
  };
  for (const auto &[command, help] : commands)
  {
    app.add_subcommand(std::string(to_string(command)), help)->callback([&config, command = command] {
      config.command = command;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::ParseError &e)
  {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  config.format = formats.at(CLI::detail::to_lower(format_name));

  if (seed_opt->count() == 0)
  {
    if (const char *env = std::getenv("CONEFIX_SEED"))
    {
      try
      {
        std::size_t used = 0;
        config.seed      = std::stoull(env, &used);
        if (env[used] != '\0')
        {
          throw std::invalid_argument(env);
        }
      }
      catch (const std::exception &)
      {
        err << "error: CONEFIX_SEED must be a non-negative integer\n";
        return kExitUsage;
      }
    }
  }
  return run(config, out, err);
}

std::string trace_csv(const IterationTrace &trace)
{
  auto cell = [](const Real &r) { return format_real(r); };
  std::string out = "n,x_n,step_norm,a_priori_bound,ratio\n";
  for (std::size_t n = 0; n < trace.step_norms.size(); ++n)
  {
    const auto &x = trace.iterates[n];
    std::string xs;
    for (std::size_t i = 0; i < x.dim(); ++i)
    {
      xs += (i ? ";" : "") + cell(x[i]);
    }
    out += std::to_string(n) + "," + xs + "," + cell(trace.step_norms[n]) + "," + cell(trace.a_priori_bound[n]) +
           ",";
    if (n > 0 && trace.step_norms[n - 1] > 0)
    {
      out += cell(trace.step_norms[n] / trace.step_norms[n - 1]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace conefix::cli
