// Copyright 2026 The fastlocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "fastlocc/cli.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/kak.hpp"
#include "report.hpp"

namespace fastlocc {
namespace {

using detail::Report;
using detail::report_complex_list;
using detail::report_number;

struct Common {
  std::string fixture;
  std::vector<std::string> params;
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
};

struct InputPlan {
  bool basis = true;
  std::size_t count = 0;
  std::string text = "basis";
};

FixtureParams parse_params(const std::vector<std::string>& raw) {
  FixtureParams out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Errc::invalid_input, "expected key=value, got '" + p + "'");
    long long value = 0;
    const char* first = p.data() + eq + 1;
    const char* last = p.data() + p.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw Error(Errc::invalid_input, "parameter '" + p.substr(0, eq) + "' needs an integer value");
    out[p.substr(0, eq)] = value;
  }
  return out;
}

InputPlan parse_inputs(const std::string& text) {
  InputPlan plan;
  plan.text = text;
  if (text == "basis") return plan;
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t k = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k > 0) {
      plan.basis = false;
      plan.count = k;
      return plan;
    }
  }
  throw Error(Errc::invalid_input, "--inputs expects basis or random:K with K >= 1, got '" + text + "'");
}

std::vector<StateVector> make_inputs(std::size_t dim, const InputPlan& plan, std::uint64_t seed) {
  std::vector<StateVector> out;
  if (plan.basis) {
    for (std::size_t i = 0; i < dim; ++i) out.push_back(StateVector::basis(dim, i));
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < plan.count; ++i) out.push_back(StateVector::random(dim, rng));
  return out;
}

const char* kind_name(const FixtureSpec& spec) {
  switch (spec.index()) {
    case 0: return "controlled";
    case 1: return "double-group";
    default: return "search";
  }
}

Report header(const char* command, const ExampleFixture& fx, const Common& c) {
  Report r;
  r["command"] = command;
  r["fixture"] = fx.name;
  r["kind"] = kind_name(fx.spec);
  r["order"] = std::visit([](const auto& s) { return s.group.order(); }, fx.spec);
  r["seed"] = c.seed;
  r["tol"] = c.tol;
  return r;
}

Report kak_json(const KakInvariants& k) {
  return Report::array({report_number(k.alpha), report_number(k.beta), report_number(k.gamma)});
}

Report conditions_json(const FastConditionReport& rep) {
  Report r;
  r["passed"] = rep.passed();
  r["equal_magnitude"] = rep.equal_magnitude;
  r["c_unitary"] = rep.c_unitary;
  r["rows_form_group"] = rep.rows_group.has_value();
  const auto first = rep.first_failure();
  if (first)
    r["first_failure"] = *first;
  else
    r["first_failure"] = nullptr;
  r["magnitude_deviation"] = report_number(rep.magnitude_deviation);
  r["unitarity_residual"] = report_number(rep.unitarity_residual);
  r["diagnostics"] = rep.diagnostics;
  return r;
}

using Simulator = std::function<std::vector<BranchTranscript>(const StateVector&)>;

// Runs one protocol over all inputs; protocol failures are recorded in the
// report, anything else propagates.
bool run_protocol(const std::string& name, const Simulator& sim,
                  const std::vector<StateVector>& inputs, bool elide, Report& out) {
  Report p;
  p["protocol"] = name;
  Report branches = Report::array();
  double max_residual = 0.0;
  std::size_t skipped = 0;
  bool ok = true;
  std::string error;
  try {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      for (const auto& t : sim(inputs[i])) {
        if (t.skipped) ++skipped;
        max_residual = std::max(max_residual, t.residual);
        if (elide) continue;
        Report b;
        b["input"] = i;
        b["l"] = t.l;
        b["m"] = t.m;
        b["probability"] = report_number(t.probability);
        b["skipped"] = t.skipped;
        b["theta"] = report_number(t.theta);
        b["residual"] = report_number(t.residual);
        branches.push_back(std::move(b));
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::protocol_violation && e.code() != Errc::precondition_violated) throw;
    ok = false;
    error = e.what();
  }
  p["passed"] = ok;
  if (!ok) p["error"] = error;
  p["max_residual"] = report_number(max_residual);
  p["skipped_branches"] = skipped;
  if (!elide) p["branches"] = std::move(branches);
  out.push_back(std::move(p));
  return ok;
}

bool verify_double(const DoubleGroupSpec& spec, const std::vector<StateVector>& inputs, double tol,
                   bool elide, Report& protocols) {
  bool ok = true;
  ok &= run_protocol("fast", [&](const StateVector& s) { return simulate_fast_double(spec, s, tol); },
                     inputs, elide, protocols);
  ok &= run_protocol("slow", [&](const StateVector& s) { return simulate_slow_double(spec, s, tol); },
                     inputs, elide, protocols);
  ok &= run_protocol("symmetrized",
                     [&](const StateVector& s) { return simulate_symmetrized(spec, s, tol); }, inputs,
                     elide, protocols);
  return ok;
}

struct Outcome {
  Report report;
  int code = kExitPass;
};

Outcome cmd_verify(const ExampleFixture& fx, const Common& c, const std::string& inputs_text,
                   bool elide) {
  Outcome o{header("verify", fx, c)};
  const InputPlan plan = parse_inputs(inputs_text);
  o.report["inputs"] = plan.text;
  Report protocols = Report::array();
  bool ok = true;
  if (const auto* spec = std::get_if<ControlledUnitarySpec>(&fx.spec)) {
    o.report["d_a"] = spec->d_a();
    o.report["d_b"] = spec->d_b();
    const auto inputs = make_inputs(spec->d_a() * spec->d_b(), plan, c.seed);
    ok &= run_protocol("fast",
                       [&](const StateVector& s) { return simulate_fast_controlled(*spec, s, c.tol); },
                       inputs, elide, protocols);
    ok &= run_protocol("slow",
                       [&](const StateVector& s) { return simulate_slow_controlled(*spec, s, c.tol); },
                       inputs, elide, protocols);
  } else if (const auto* dspec = std::get_if<DoubleGroupSpec>(&fx.spec)) {
    o.report["d_a"] = dspec->d_a();
    o.report["d_b"] = dspec->d_b();
    const auto inputs = make_inputs(dspec->d_a() * dspec->d_b(), plan, c.seed);
    ok = verify_double(*dspec, inputs, c.tol, elide, protocols);
  } else {
    throw Error(Errc::invalid_input, "search fixtures carry no coefficients; use 'search'");
  }
  o.report["protocols"] = std::move(protocols);
  o.report["passed"] = ok;
  o.code = ok ? kExitPass : kExitFailure;
  return o;
}

Outcome cmd_check(const ExampleFixture& fx, const Common& c) {
  Outcome o{header("check", fx, c)};
  FastConditionReport rep;
  if (const auto* dspec = std::get_if<DoubleGroupSpec>(&fx.spec)) {
    rep = check_fast_conditions(dspec->group, dspec->factor, dspec->c, c.tol);
    o.report["coefficients"] = report_complex_list(dspec->c);
  } else if (const auto* spec = std::get_if<ControlledUnitarySpec>(&fx.spec)) {
    // controlled fixtures are checked through their double-group form
    const auto conv = convert_controlled(*spec, c.tol);
    rep = conv.conditions;
    o.report["via"] = "conversion";
    o.report["coefficients"] = report_complex_list(conv.c);
  } else {
    throw Error(Errc::invalid_input, "search fixtures carry no coefficients; use 'search'");
  }
  o.report["conditions"] = conditions_json(rep);
  o.report["passed"] = rep.passed();
  o.code = rep.passed() ? kExitPass : kExitFailure;
  return o;
}

std::string class_label(const SearchSurvivor& s, std::size_t schmidt_rank) {
  if (s.product) return "product";
  if (s.kak) {
    // rounded so that numerically equal invariants share a label
    auto r = [](double x) { return std::round(x * 1e8) / 1e8; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "kak(%.8f, %.8f, %.8f)", r(s.kak->alpha) + 0.0,
                  r(s.kak->beta) + 0.0, r(s.kak->gamma) + 0.0);
    return buf;
  }
  return "schmidt rank " + std::to_string(schmidt_rank);
}

Outcome cmd_search(const ExampleFixture& fx, const Common& c, std::optional<std::uint64_t> budget,
                   unsigned workers, bool classify) {
  Outcome o{header("search", fx, c)};
  SearchProblem problem;
  if (const auto* p = std::get_if<SearchProblem>(&fx.spec)) {
    problem = *p;
  } else if (const auto* d = std::get_if<DoubleGroupSpec>(&fx.spec)) {
    problem = SearchProblem{d->group, d->u, d->v, d->factor};
    o.report["note"] = "fixture coefficients ignored";
  } else {
    throw Error(Errc::invalid_input, "search needs a double-group or search fixture");
  }
  SearchLimits limits;
  if (budget) {
    limits.budget = *budget;
    limits.allow_large = true;
  }
  limits.workers = workers;
  const SearchResult res = theorem3_search(problem, limits, c.tol);
  const std::size_t da = problem.u.front().rows();
  const std::size_t db = problem.v.front().rows();
  o.report["budget"] = limits.budget;
  o.report["candidates"] = res.candidates;
  o.report["evaluated"] = res.evaluated;
  o.report["truncated"] = res.truncated;
  o.report["survivor_count"] = res.survivors.size();
  Report survivors = Report::array();
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < res.survivors.size(); ++i) {
    const auto& s = res.survivors[i];
    const std::size_t rank = operator_schmidt_rank(s.unitary, da, db, c.tol);
    Report r;
    r["k"] = s.k;
    r["c"] = report_complex_list(s.c);
    r["product"] = s.product;
    r["schmidt_rank"] = rank;
    if (s.kak)
      r["kak"] = kak_json(*s.kak);
    else
      r["kak"] = nullptr;
    survivors.push_back(std::move(r));
    classes[class_label(s, rank)].push_back(i);
  }
  o.report["survivors"] = std::move(survivors);
  if (classify) {
    Report cls = Report::array();
    for (const auto& [label, members] : classes) {
      Report r;
      r["class"] = label;
      r["count"] = members.size();
      r["members"] = members;
      cls.push_back(std::move(r));
    }
    o.report["classes"] = std::move(cls);
  }
  o.code = res.truncated ? kExitBudget : kExitPass;
  return o;
}

Outcome cmd_convert(const ExampleFixture& fx, const Common& c, const std::string& out_path,
                    const std::string& inputs_text) {
  Outcome o{header("convert", fx, c)};
  const auto* spec = std::get_if<ControlledUnitarySpec>(&fx.spec);
  if (spec == nullptr) throw Error(Errc::invalid_input, "convert needs a controlled fixture");
  const ConversionResult conv = convert_controlled(*spec, c.tol);
  ExampleFixture converted{fx.name + "-converted", GroupDescriptor::abelian(spec->group.cycles()),
                           conv.converted};
  const bool residual_ok = conv.residual <= c.tol;
  o.report["residual"] = report_number(conv.residual);
  o.report["alpha"] = detail::report_complex(conv.alpha);
  o.report["labels"] = conv.labels;
  o.report["coefficients"] = report_complex_list(conv.c);
  o.report["conditions"] = conditions_json(conv.conditions);
  o.report["cost_before"] = report_number(entanglement_cost(*spec));
  o.report["cost_after"] = report_number(entanglement_cost(conv.converted));

  Report protocols = Report::array();
  const InputPlan plan = parse_inputs(inputs_text);
  const auto inputs = make_inputs(conv.converted.d_a() * conv.converted.d_b(), plan, c.seed);
  const bool verified = verify_double(conv.converted, inputs, c.tol, true, protocols);
  o.report["verify"] = std::move(protocols);

  const std::string text = fixture_to_json(converted);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!(f << text)) throw Error(Errc::invalid_input, "cannot write " + out_path);
    o.report["written"] = out_path;
  } else if (c.json) {
    o.report["converted_fixture"] = Report::parse(text);
  }
  const bool ok = residual_ok && conv.conditions.passed() && verified;
  o.report["passed"] = ok;
  o.code = ok ? kExitPass : kExitFailure;
  return o;
}

Outcome cmd_report(const ExampleFixture& fx, const Common& c, bool kak, bool schmidt, bool cost) {
  Outcome o{header("report", fx, c)};
  if (!kak && !schmidt && !cost) kak = schmidt = cost = true;
  ComplexMatrix u;
  std::size_t da = 0, db = 0;
  double ebits = 0.0;
  if (const auto* s = std::get_if<ControlledUnitarySpec>(&fx.spec)) {
    u = target_unitary(*s, c.tol);
    da = s->d_a();
    db = s->d_b();
    ebits = entanglement_cost(*s);
  } else if (const auto* d = std::get_if<DoubleGroupSpec>(&fx.spec)) {
    u = target_unitary(*d, c.tol);
    da = d->d_a();
    db = d->d_b();
    ebits = entanglement_cost(*d);
  } else {
    throw Error(Errc::invalid_input, "search fixtures have no target unitary");
  }
  o.report["d_a"] = da;
  o.report["d_b"] = db;
  if (kak) {
    if (da == 2 && db == 2)
      o.report["kak"] = kak_json(kak_invariants(u));
    else
      o.report["kak"] = "n/a (not a two-qubit unitary)";
  }
  if (schmidt) {
    o.report["schmidt_rank"] = operator_schmidt_rank(u, da, db, c.tol);
    Report coeffs = Report::array();
    for (double x : operator_schmidt_coefficients(u, da, db))
      if (x > c.tol) coeffs.push_back(report_number(x));
    o.report["schmidt_coefficients"] = std::move(coeffs);
  }
  if (cost) o.report["ebits"] = report_number(ebits);
  return o;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("fixture", c.fixture, "Fixture file (.json) or builtin example name")->required();
  sub->add_option("params", c.params, "key=value parameters for builtin examples");
  sub->add_option("--tol", c.tol, "Numerical tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed for random inputs")->capture_default_str();
  sub->add_flag("--json", c.json, "Print the report as JSON");
  sub->add_flag("--timing", c.timing, "Include wall-clock time in the report");
}

std::string builtin_list() {
  std::string s;
  for (const auto& n : example_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, simulate and verify fast LOCC protocols for bipartite unitaries"};
  app.name("fastlocc");
  app.require_subcommand(1, 1);
  app.footer("Builtin examples: " + builtin_list() +
             "\nExit codes: 0 pass, 1 verification or condition failure, 2 invalid input, "
             "3 search budget exhausted");

  Common common;
  std::string inputs = "basis";
  bool elide = false;
  auto* verify = app.add_subcommand("verify", "Simulate every protocol branch against the target");
  add_common(verify, common);
  verify->add_option("--inputs", inputs, "basis or random:K")->capture_default_str();
  verify->add_flag("--elide-branches", elide, "Omit per-branch transcripts");

  auto* check = app.add_subcommand("check", "Check the fast-protocol coefficient conditions");
  add_common(check, common);

  std::uint64_t budget = 0;
  unsigned workers = 0;
  bool classify = false;
  auto* search = app.add_subcommand("search", "Search root-of-unity coefficient grids");
  add_common(search, common);
  auto* budget_opt =
      search->add_option("--budget", budget, "Maximum candidates to evaluate (allows N > 4)");
  search->add_option("--workers", workers, "Worker threads (0: hardware concurrency)");
  search->add_flag("--classify", classify, "Group survivors by local equivalence class");

  std::string out_path;
  std::string convert_inputs = "basis";
  auto* convert = app.add_subcommand("convert", "Convert a controlled fixture to double-group form");
  add_common(convert, common);
  convert->add_option("--out", out_path, "Write the converted fixture to this path");
  convert->add_option("--inputs", convert_inputs, "Inputs for re-verification: basis or random:K")
      ->capture_default_str();

  bool kak = false, schmidt = false, cost = false;
  auto* report = app.add_subcommand("report", "Analytics for the target unitary");
  add_common(report, common);
  report->add_flag("--kak", kak, "Two-qubit canonical invariants");
  report->add_flag("--schmidt", schmidt, "Operator Schmidt rank and coefficients");
  report->add_flag("--cost", cost, "Entanglement cost in ebits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const ExampleFixture fx = load_fixture(common.fixture, parse_params(common.params), common.tol);
    Outcome o;
    if (*verify)
      o = cmd_verify(fx, common, inputs, elide);
    else if (*check)
      o = cmd_check(fx, common);
    else if (*search)
      o = cmd_search(fx, common,
                     budget_opt->count() ? std::optional<std::uint64_t>(budget) : std::nullopt,
                     workers, classify);
    else if (*convert)
      o = cmd_convert(fx, common, out_path, convert_inputs);
    else
      o = cmd_report(fx, common, kak, schmidt, cost);
    if (common.timing) {
      const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
      o.report["elapsed_ms"] = report_number(dt.count());
    }
    o.report["exit_code"] = o.code;
    if (common.json)
      detail::write_json(out, o.report);
    else
      detail::write_text(out, o.report);
    return o.code;
  } catch (const Error& e) {
    err << "fastlocc: " << e.what() << "\n";
    if (e.code() == Errc::unknown_fixture) err << "builtin examples: " << builtin_list() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace fastlocc
