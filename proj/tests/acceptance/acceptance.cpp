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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/hadamard.hpp"
#include "fastlocc/kak.hpp"
#include "fastlocc/protocols.hpp"
#include "generators.hpp"

using namespace fastlocc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;

// Collects the first few failed expectations of a criterion.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }

  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!info_.empty()) os << ", " << info_;
    if (failures_) os << ", " << failures_ << " failed: " << notes_;
    return os.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string notes_;
  std::string info_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double angle_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

double weighted_turns(const AbelianCycleStructure& g, std::size_t l, std::size_t m) {
  const auto a = g.tuple(l);
  const auto b = g.tuple(m);
  double t = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s)
    t += double(a[s] * b[s] % g.cycles()[s]) / double(g.cycles()[s]);
  return t;
}

DoubleGroupSpec dbl(const std::string& name, const FixtureParams& p = {}) {
  return std::get<DoubleGroupSpec>(example_fixture(name, p).spec);
}
ControlledUnitarySpec controlled(const std::string& name, const FixtureParams& p = {}) {
  return std::get<ControlledUnitarySpec>(example_fixture(name, p).spec);
}

// Every non-skipped branch equals U|psi> up to phase; probabilities sum to one.
template <typename Spec, typename Sim>
double run_branches(Ledger& led, const Spec& spec, Sim sim, const StateVector& input,
                    std::size_t* branches = nullptr) {
  const ComplexMatrix u = target_unitary(spec);
  const auto want = fastlocc::apply(u, input.amplitudes());
  const auto ts = sim(spec, input, kDefaultTol);
  if (branches) *branches = ts.size();
  double total = 0.0, worst = 0.0;
  for (const auto& t : ts) {
    total += t.probability;
    if (t.skipped) continue;
    worst = std::max(worst, t.residual);
    const bool same = t.final_state && equal_up_to_global_phase(t.final_state->amplitudes(), want, 1e-9);
    led.expect(same, "branch (" + std::to_string(t.l) + "," + std::to_string(t.m) + ") differs from U");
  }
  led.expect(std::abs(total - 1.0) < 1e-10, "probabilities sum to " + fmt("%.12f", total));
  led.expect(worst < 1e-9, "residual " + fmt("%.3g", worst));
  return worst;
}

std::vector<StateVector> inputs(std::size_t dim, std::mt19937_64& rng, int random, bool basis) {
  std::vector<StateVector> out;
  if (basis)
    for (std::size_t i = 0; i < dim; ++i) out.push_back(StateVector::basis(dim, i));
  for (int i = 0; i < random; ++i) out.push_back(StateVector::random(dim, rng));
  return out;
}

void expect_kak(Ledger& led, const ComplexMatrix& u, KakInvariants want, double tol, const std::string& tag) {
  const KakInvariants got = kak_invariants(u);
  led.expect(kak_distance(got, want) < tol,
             tag + " kak (" + fmt("%.10f", got.alpha) + ", " + fmt("%.10f", got.beta) + ", " +
                 fmt("%.10f", got.gamma) + ")");
}

void expect_conditions(Ledger& led, const DoubleGroupSpec& spec, const std::string& tag) {
  const auto rep = check_fast_conditions(spec.group, spec.factor, spec.c);
  led.expect(rep.passed(), tag + " fails condition " + std::to_string(rep.first_failure().value_or(0)));
}

// --- criteria ---------------------------------------------------------------

void c1_example4(Ledger& led) {
  const auto spec = dbl("ex4");
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (const auto& in : inputs(4, rng, 20, true)) {
    std::size_t n = 0;
    worst = std::max(worst, run_branches(led, spec, simulate_fast_double, in, &n));
    led.expect(n == 4, "branch count " + std::to_string(n));
  }
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix zz_half = s * (ComplexMatrix::identity(4) + cplx(0, 1) * tensor_product(pauli_z(), pauli_z()));
  led.expect(max_abs_diff(target_unitary(spec), zz_half) < 1e-12, "target differs from (I + iZZ)/sqrt2");
  const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  expect_kak(led, target_unitary(spec), kak_invariants(cnot), 1e-8, "ex4");
  expect_kak(led, target_unitary(spec), {kPi / 4, 0, 0}, 1e-8, "ex4");
  led.note("max residual " + fmt("%.2e", worst));
}

void c2_example5(Ledger& led) {
  const std::map<std::string, KakInvariants> want{
      {"ex5a", {kPi / 4, kPi / 4, kPi / 4}}, {"ex5b", {kPi / 4, kPi / 4, 0}}, {"ex5c", {kPi / 4, kPi / 4, kPi / 8}}};
  std::mt19937_64 rng(2);
  for (const auto& [name, kak] : want) {
    const auto spec = dbl(name);
    expect_conditions(led, spec, name);
    for (const auto& in : inputs(4, rng, 20, false)) {
      run_branches(led, spec, simulate_fast_double, in);
      run_branches(led, spec, simulate_symmetrized, in);
    }
    expect_kak(led, target_unitary(spec), kak, 1e-8, name);
  }
}

void c3_example6(Ledger& led) {
  std::mt19937_64 rng(3);
  for (long long n = 2; n <= 8; ++n) {
    const std::string tag = "ex6 N=" + std::to_string(n);
    const auto spec = dbl("ex6", {{"N", n}});
    expect_conditions(led, spec, tag);
    const ComplexMatrix u = target_unitary(spec);
    led.expect(operator_schmidt_rank(u, n, n) == std::size_t(n), tag + " Schmidt rank");
    run_branches(led, spec, simulate_fast_double, StateVector::random(n * n, rng));
    // same Schmidt spectrum as sum_k |k><k| (x) Z^k
    std::vector<ComplexMatrix> zk;
    for (long long k = 0; k < n; ++k) zk.push_back(phase_gate(n, k));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    const ComplexMatrix ref = target_unitary(make_controlled_spec(AbelianCycleStructure({std::size_t(n)}), all, zk));
    const auto a = operator_schmidt_coefficients(u, n, n);
    const auto b = operator_schmidt_coefficients(ref, n, n);
    double d = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    led.expect(d < 1e-9, tag + " Schmidt spectrum differs by " + fmt("%.3g", d));
    if (n == 2) expect_kak(led, u, kak_invariants(ref), 1e-8, tag);
  }
}

void c4_example7(Ledger& led) {
  const auto spec = dbl("ex7");
  led.expect(spec.order() == 8, "order " + std::to_string(spec.order()));
  expect_conditions(led, spec, "ex7");
  std::mt19937_64 rng(4);
  for (const auto& in : inputs(4, rng, 10, true)) run_branches(led, spec, simulate_fast_double, in);
  expect_kak(led, target_unitary(spec), {kPi / 4, kPi / 8, 0}, 1e-8, "ex7");
  const double e = entanglement_cost(spec);
  led.expect(std::abs(e - 3.0) < 1e-12, "cost " + fmt("%.6f", e));
}

void c5_example8(Ledger& led) {
  std::mt19937_64 rng(5);
  std::string table;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const std::string tag = "ex8 n=" + std::to_string(n) + " m=" + std::to_string(m);
      const auto spec = dbl("ex8", {{"n", (long long)n}, {"m", (long long)m}});
      expect_conditions(led, spec, tag);
      for (const auto& in : inputs(4, rng, 3, true)) run_branches(led, spec, simulate_fast_double, in);
      const KakInvariants k = kak_invariants(target_unitary(spec));
      led.expect(std::abs(k.alpha - kPi / 4) < 1e-8, tag + " alpha " + fmt("%.10f", k.alpha));
      led.expect(std::abs(k.gamma) < 1e-8, tag + " gamma " + fmt("%.10f", k.gamma));
      table += (table.empty() ? "" : " ") + std::to_string(n) + "/" + std::to_string(m) + ":" +
               fmt("%.6f", k.beta);
    }
  led.note("beta[n/m] " + table);
}

void c6_search(Ledger& led) {
  const auto problem = std::get<SearchProblem>(example_fixture("rep-c2-zz").spec);
  const auto res = theorem3_search(problem);
  led.expect(!res.truncated, "search truncated");
  led.expect(res.survivors.size() == 2, std::to_string(res.survivors.size()) + " survivors");
  const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  for (const auto& s : res.survivors) {
    led.expect(!s.product, "survivor is a product");
    led.expect(s.kak && kak_distance(*s.kak, kak_invariants(cnot)) < 1e-8, "survivor outside the CNOT class");
  }
  led.note(std::to_string(res.candidates) + " candidates");
}

void c7_conversion(Ledger& led) {
  std::mt19937_64 rng(7);
  testing::RandomControlledOptions opt;
  opt.allow_subsets = true;
  opt.rotate_basis = true;
  int subsets = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    opt.projectors = trial % 4 == 0;
    const auto spec = testing::random_controlled_spec(rng, opt);
    const std::string tag = "trial " + std::to_string(trial);
    led.expect(spec.order() <= 8 && spec.d_b() <= 4, tag + " out of range");
    if (spec.subset.size() < spec.order()) ++subsets;
    const auto conv = convert_controlled(spec);
    const ComplexMatrix wb = tensor_product(ComplexMatrix::identity(spec.d_a()), conv.basis);
    const double r = max_abs_diff(wb * tensor_product(conv.m_a, conv.m_b) * conv.w * wb.adjoint(), target_unitary(spec));
    worst = std::max(worst, r);
    led.expect(r < 1e-9, tag + " residual " + fmt("%.3g", r));
    led.expect(conv.conditions.passed(), tag + " conditions");
    led.expect(std::abs(entanglement_cost(conv.converted) - entanglement_cost(spec)) < 1e-12, tag + " cost changed");
  }
  led.expect(subsets > 0, "no proper subsets generated");
  led.note(std::to_string(subsets) + " proper subsets, max residual " + fmt("%.2e", worst));
}

void c8_controlled(Ledger& led) {
  std::mt19937_64 rng(8);
  std::vector<ControlledUnitarySpec> specs;
  for (const char* name : {"ex1i", "ex1ii", "ex2i", "ex2ii", "ex3"}) specs.push_back(controlled(name));
  testing::RandomControlledOptions opt;
  opt.allow_subsets = true;
  opt.rotate_basis = true;
  for (int i = 0; i < 30; ++i) {
    opt.projectors = i % 3 == 0;
    specs.push_back(testing::random_controlled_spec(rng, opt));
  }
  for (const auto& spec : specs) {
    for (const auto& in : inputs(spec.d_a() * spec.d_b(), rng, 2, false)) {
      run_branches(led, spec, simulate_slow_controlled, in);
      run_branches(led, spec, simulate_fast_controlled, in);
      for (const auto& t : simulate_fast_controlled(spec, in)) {
        if (t.skipped) continue;
        const double want = kTwoPi * weighted_turns(spec.group, t.l, t.m);
        led.expect(angle_distance(t.theta, want) < 1e-9, "theta " + fmt("%.6f", t.theta));
      }
    }
  }
}

void c9_embedding(Ledger& led) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t da = testing::uniform_index(rng, 1, 3);
    const std::size_t db = testing::uniform_index(rng, 1, 3);
    const std::size_t dr = testing::uniform_index(rng, 1, 2);
    const auto ch = embed_unitary(random_unitary(da * db, rng), da, db, random_unitary(dr * db, rng));
    led.expect(ch.circuit_residual < 1e-10 && ch.isometry_residual < 1e-10,
               "extension " + std::to_string(trial) + " residual " + fmt("%.3g", ch.circuit_residual));
  }
  testing::RandomControlledOptions opt;
  opt.projectors = true;
  opt.max_order = 6;
  opt.max_db = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const auto res = compress_controlled(testing::random_controlled_spec(rng, opt));
    led.expect(res.check.circuit_residual < 1e-10 && res.check.isometry_residual < 1e-10,
               "compression " + std::to_string(trial) + " residual " + fmt("%.3g", res.check.circuit_residual));
  }
  const auto rank21 = make_controlled_spec(AbelianCycleStructure({2}), {0, 1}, {ComplexMatrix::identity(2), pauli_z()},
                                           {ComplexMatrix::diagonal(std::vector<cplx>{1, 1, 0}),
                                            ComplexMatrix::diagonal(std::vector<cplx>{0, 0, 1})});
  const auto res = compress_controlled(rank21);
  led.expect(res.check.circuit_residual < 1e-10 && res.check.isometry_residual < 1e-10, "rank-(2,1) residual");
  led.expect(res.compressed.d_a() == 2 && res.compressed.projectors.empty(), "rank-(2,1) shape");
}

void c10_counterexample(Ledger& led) {
  const auto spec = dbl("counterexample");
  const auto rep = check_fast_conditions(spec.group, spec.factor, spec.c);
  led.expect(rep.equal_magnitude, "condition (i) should hold");
  led.expect(rep.c_unitary, "condition (ii) should hold");
  led.expect(!rep.rows_group.has_value(), "rows unexpectedly form a group");
  led.expect(rep.first_failure() == 3, "first failure " + std::to_string(rep.first_failure().value_or(0)));
}

void c11_properties(Ledger& led) {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const AbelianCycleStructure g(testing::random_cycles(16, rng));
    const std::size_t n = g.order();
    const TCPair tc = build_tc(character_table(g), testing::random_complex_permutation(n, rng),
                               testing::random_complex_permutation(n, rng), testing::random_phases(n, rng));
    const ExchangeReport rep = verify_exchange(tc);
    led.expect(rep.ok(), "exchange " + std::to_string(trial));
    if (!rep.ok()) continue;
    const ComplexMatrix t_hat = std::sqrt(double(n)) * tc.t;
    for (std::size_t l = 0; l < n; ++l) {
      const ComplexMatrix p = tc.c * z_row_gate(t_hat, l) * tc.c.adjoint();
      worst = std::max(worst, max_abs_diff(rep.certificates[l].to_matrix(), p));
    }
  }
  led.expect(worst < 1e-9, "exchange residual " + fmt("%.3g", worst));

  int structures = 0;
  for (const auto& cycles : testing::all_cycle_structures(32)) {
    const AbelianCycleStructure g(cycles);
    ++structures;
    led.expect(rows_form_group(character_table(g)).has_value(), "character table rows not closed");
  }

  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix u = random_unitary(4, rng);
    const ComplexMatrix v = testing::random_local_2q(rng) * u * testing::random_local_2q(rng);
    led.expect(kak_distance(kak_invariants(u), kak_invariants(v)) < 1e-8, "kak not locally invariant");
  }
  led.note(std::to_string(structures) + " group structures");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ex4 fast protocol, CNOT class", 1, c1_example4},
      {2, "ex5a/ex5b/ex5c conditions, simulation, KAK", 5, c2_example5},
      {3, "ex6 for N=2..8", 10, c3_example6},
      {4, "ex7 unfaithful C8 representation", 5, c4_example7},
      {5, "ex8 dihedral family n=2..6", 60, c5_example8},
      {6, "coefficient search on {II, ZZ}", 1, c6_search},
      {7, "controlled-to-double conversion, 50 random fixtures", 30, c7_conversion},
      {8, "controlled fast vs slow protocol", 20, c8_controlled},
      {9, "extension and compression", 10, c9_embedding},
      {10, "counterexample fails the row-group condition", 1, c10_counterexample},
      {11, "property suites", 60, c11_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger led;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(led);
    } catch (const std::exception& e) {
      led.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    led.expect(secs < c.limit_s, "runtime over limit");
    const bool ok = led.ok();
    failed += ok ? 0 : 1;
    std::printf("%s [%2d] %s (%.3f s, limit %.0f s): %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_s, led.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
