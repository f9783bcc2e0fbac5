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

#include <catch_amalgamated.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/kak.hpp"
#include "generators.hpp"

using namespace fastlocc;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename F>
Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_input;
}

DoubleGroupSpec dbl(const std::string& name, const FixtureParams& p = {}) {
  return std::get<DoubleGroupSpec>(example_fixture(name, p).spec);
}

std::vector<double> sorted_schmidt(const ComplexMatrix& u, std::size_t da, std::size_t db) {
  auto s = operator_schmidt_coefficients(u, da, db);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("build_c_matrix", "[constructions]") {
  const auto c2 = abelian_group({2}).table;
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix c = build_c_matrix(c2, FactorSystem::trivial(2), std::vector<cplx>{s, cplx(0, s)});
  CHECK(max_abs_diff(c, ComplexMatrix{{s, cplx(0, s)}, {cplx(0, s), s}}) < 1e-15);

  const auto d3 = dihedral_group(3);
  std::vector<cplx> delta(6, 0.0);
  delta[0] = 1.0;
  CHECK(build_c_matrix(d3, FactorSystem::trivial(6), delta) == ComplexMatrix::identity(6));

  const auto klein = abelian_group({2, 2}).table;
  const ComplexMatrix uni = build_c_matrix(klein, FactorSystem::trivial(4), std::vector<cplx>(4, 0.5));
  for (std::size_t r = 1; r < 4; ++r)
    for (std::size_t f = 0; f < 4; ++f) CHECK(uni(r, f) == uni(0, f));
  CHECK_FALSE(is_unitary(uni));
}

TEST_CASE("check_fast_conditions", "[constructions]") {
  const auto klein = abelian_group({2, 2}).table;
  const auto lam = FactorSystem::trivial(4);
  const auto pass = check_fast_conditions(klein, lam, std::vector<cplx>{0.5, 0.5, 0.5, -0.5});
  CHECK(pass.passed());
  CHECK_FALSE(pass.first_failure());
  REQUIRE(pass.rows_group);
  CHECK(pass.rows_group->table.order() == 4);

  const cplx e = std::polar(1.0, 0.3);
  const auto counter = check_fast_conditions(klein, lam, std::vector<cplx>{0.5, 0.5, 0.5 * e, -0.5 * e});
  CHECK(counter.equal_magnitude);
  CHECK(counter.c_unitary);
  CHECK_FALSE(counter.rows_group);
  CHECK(counter.first_failure() == 3);

  const auto uniform = check_fast_conditions(klein, lam, std::vector<cplx>(4, 0.5));
  CHECK(uniform.equal_magnitude);
  CHECK_FALSE(uniform.c_unitary);
  CHECK(uniform.first_failure() == 2);
  CHECK_FALSE(uniform.diagnostics.empty());

  const auto c2 = abelian_group({2}).table;
  const auto unequal =
      check_fast_conditions(c2, FactorSystem::trivial(2), std::vector<cplx>{std::cos(0.4), cplx(0, std::sin(0.4))});
  CHECK_FALSE(unequal.equal_magnitude);
  CHECK(unequal.c_unitary);
  CHECK(unequal.first_failure() == 1);
}

TEST_CASE("cyclic_coeffs", "[constructions]") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto c2 = cyclic_coeffs(2);
  CHECK(std::abs(c2[0] - cplx(s, 0)) < 1e-15);
  CHECK(std::abs(c2[1] - cplx(0, -s)) < 1e-15);
  const auto c3 = cyclic_coeffs(3);
  const double t = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(c3[0] - t) < 1e-15);
  CHECK(std::abs(c3[1] - t * std::polar(1.0, -2 * kPi / 3)) < 1e-15);
  CHECK(std::abs(c3[2] - t) < 1e-15);
  CHECK(cyclic_coeffs(1) == std::vector<cplx>{1.0});
}

TEST_CASE("dihedral_coeffs", "[constructions]") {
  const auto c = dihedral_coeffs(2, 1);
  const std::vector<cplx> want{0.5, cplx(0, 0.5), cplx(0, 0.5), -0.5};
  for (std::size_t f = 0; f < 4; ++f) CHECK(std::abs(c[f] - want[f]) < 1e-15);
  CHECK(dihedral_coeffs(3, 1).size() == 6);
  for (cplx z : dihedral_coeffs(3, 1)) CHECK(std::abs(z) == Approx(1 / std::sqrt(6.0)));
  CHECK(code_of([] { dihedral_coeffs(4, 2); }) == Errc::invalid_input);
  CHECK(code_of([] { dihedral_coeffs(3, 0); }) == Errc::invalid_input);
}

TEST_CASE("cyclic and dihedral coefficient families pass all conditions", "[constructions][property]") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = abelian_group({n}).table;
    const auto rep = check_fast_conditions(g, FactorSystem::trivial(n), cyclic_coeffs(n));
    CHECK(rep.passed());
    CHECK(is_unitary(rep.c_matrix));
  }
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t m = 1; m < 2 * n; ++m) {
      if (std::gcd(n, m) != 1) continue;
      INFO("n=" << n << " m=" << m);
      const auto g = dihedral_group(n);
      const auto rep = check_fast_conditions(g, FactorSystem::trivial(2 * n), dihedral_coeffs(n, m));
      CHECK(rep.passed());
    }
}

TEST_CASE("theorem3_search on C2", "[constructions][search]") {
  const auto zz = std::get<SearchProblem>(example_fixture("rep-c2-zz").spec);
  const auto res = theorem3_search(zz);
  CHECK(res.candidates == 4);
  CHECK_FALSE(res.truncated);
  REQUIRE(res.survivors.size() == 2);
  CHECK(res.survivors[0].k == std::vector<std::size_t>{0, 1});
  CHECK(res.survivors[1].k == std::vector<std::size_t>{0, 3});
  const KakInvariants cnot{kPi / 4, 0, 0};
  for (const auto& s : res.survivors) {
    REQUIRE(s.kak);
    CHECK(kak_distance(*s.kak, cnot) < 1e-8);
    CHECK_FALSE(s.product);
  }

  const auto trivial = std::get<SearchProblem>(example_fixture("rep-c2-trivial").spec);
  const auto tr = theorem3_search(trivial);
  REQUIRE_FALSE(tr.survivors.empty());
  for (const auto& s : tr.survivors) CHECK(s.product);
}

TEST_CASE("theorem3_search on C2 x C2 finds the ex5 sets", "[constructions][search]") {
  const auto klein = std::get<SearchProblem>(example_fixture("rep-klein").spec);
  const auto res = theorem3_search(klein);
  CHECK(res.candidates == 4096);
  const std::vector<std::vector<std::size_t>> wanted{{0, 0, 0, 8}, {0, 4, 0, 12}, {0, 0, 2, 10}};
  for (const auto& k : wanted) {
    INFO(k[1] << "," << k[2] << "," << k[3]);
    const bool found = std::any_of(res.survivors.begin(), res.survivors.end(),
                                   [&](const SearchSurvivor& s) { return s.k == k; });
    CHECK(found);
  }
  // survivors come back in grid order regardless of worker count
  SearchLimits one;
  one.workers = 1;
  const auto serial = theorem3_search(klein, one);
  REQUIRE(serial.survivors.size() == res.survivors.size());
  for (std::size_t i = 0; i < res.survivors.size(); ++i) CHECK(serial.survivors[i].k == res.survivors[i].k);
}

TEST_CASE("off-grid perturbations of survivors fail", "[constructions][search][property]") {
  const auto klein = std::get<SearchProblem>(example_fixture("rep-klein").spec);
  const auto res = theorem3_search(klein);
  for (const auto& s : res.survivors)
    for (std::size_t f = 1; f < 4; ++f) {
      auto c = s.c;
      c[f] *= std::polar(1.0, 1e-3);
      const auto rep = check_fast_conditions(klein.group, klein.factor, c);
      CHECK_FALSE(rep.passed());
      CHECK((rep.first_failure() == 2 || rep.first_failure() == 3));
    }
}

TEST_CASE("theorem3_search limits", "[constructions][search]") {
  const auto klein = std::get<SearchProblem>(example_fixture("rep-klein").spec);
  SearchLimits tiny;
  tiny.budget = 100;
  const auto part = theorem3_search(klein, tiny);
  CHECK(part.truncated);
  CHECK(part.evaluated <= 100);

  const auto c5 = abelian_group({5}).table;
  std::vector<ComplexMatrix> z;
  for (int f = 0; f < 5; ++f) z.push_back(phase_gate(5, f));
  const auto big = make_search_problem(c5, z, z);
  CHECK(code_of([&] { theorem3_search(big); }) == Errc::precondition_violated);
}

TEST_CASE("example fixtures", "[constructions][fixtures]") {
  CHECK(example_names().size() >= 12);
  for (const auto& name : example_names()) CHECK_NOTHROW(example_fixture(name));
  CHECK(code_of([] { example_fixture("ex99"); }) == Errc::unknown_fixture);
  CHECK(code_of([] { example_fixture("ex4", {{"N", 3}}); }) == Errc::invalid_input);
  CHECK(code_of([] { example_fixture("ex1i", {{"N", 1}}); }) == Errc::invalid_input);

  const auto ex5a = dbl("ex5a");
  const std::vector<cplx> c5a{0.5, 0.5, 0.5, -0.5};
  CHECK(ex5a.c == c5a);
  const struct {
    const char* name;
    KakInvariants kak;
  } classes[] = {{"ex5a", {kPi / 4, kPi / 4, kPi / 4}},
                 {"ex5b", {kPi / 4, kPi / 4, 0}},
                 {"ex5c", {kPi / 4, kPi / 4, kPi / 8}},
                 {"ex7", {kPi / 4, kPi / 8, 0}},
                 {"ex4", {kPi / 4, 0, 0}}};
  for (const auto& c : classes) {
    INFO(c.name);
    CHECK(kak_distance(kak_invariants(target_unitary(dbl(c.name))), c.kak) < 1e-8);
  }
  CHECK(dbl("ex7").order() == 8);
}

TEST_CASE("ex6 is locally an N-dimensional CNOT", "[constructions][fixtures]") {
  for (long long n = 2; n <= 8; ++n) {
    const auto spec = dbl("ex6", {{"N", n}});
    const auto nn = static_cast<std::size_t>(n);
    const ComplexMatrix u = target_unitary(spec);
    CHECK(operator_schmidt_rank(u, nn, nn) == nn);
    ComplexMatrix ref(nn * nn, nn * nn);
    for (std::size_t k = 0; k < nn; ++k) {
      ComplexMatrix p(nn, nn);
      p(k, k) = 1.0;
      ref += tensor_product(p, phase_gate(nn, static_cast<std::int64_t>(k)));
    }
    const auto a = sorted_schmidt(u, nn, nn);
    const auto b = sorted_schmidt(ref, nn, nn);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == Approx(b[i]).margin(1e-9));
  }
  const KakInvariants cnot{kPi / 4, 0, 0};
  CHECK(kak_distance(kak_invariants(target_unitary(dbl("ex6", {{"N", 2}}))), cnot) < 1e-8);
}

TEST_CASE("ex8 invariants", "[constructions][fixtures]") {
  for (long long n = 2; n <= 6; ++n)
    for (long long m = 1; m < 2 * n; ++m) {
      if (std::gcd(n, m) != 1) continue;
      INFO("n=" << n << " m=" << m);
      const auto k = kak_invariants(target_unitary(dbl("ex8", {{"n", n}, {"m", m}})));
      CHECK(k.alpha == Approx(kPi / 4).margin(1e-8));
      CHECK(k.gamma == Approx(0).margin(1e-8));
    }
}

TEST_CASE("approximate_phase_subset", "[constructions][approx]") {
  const auto a = approximate_phase_subset(2 * kPi / 3, 3);
  CHECK(a.m == 1);
  CHECK(a.error < 1e-12);
  CHECK(a.ebits == Approx(std::log2(3.0)));

  const auto cz = approximate_phase_subset(kPi, 2);
  CHECK(cz.m == 1);
  CHECK(cz.error < 1e-12);
  CHECK(max_abs_diff(target_unitary(cz.spec), ComplexMatrix::diagonal(std::vector<cplx>{1, 1, 1, -1})) <
        1e-12);

  const auto b = approximate_phase_subset(1.0, 64);
  CHECK(b.m == 10);
  CHECK(b.error == Approx(std::abs(std::polar(1.0, 1.0 - 2 * kPi * 10 / 64) - 1.0)).margin(1e-12));
  CHECK(b.error <= 2 * std::sin(kPi / 128) + 1e-12);
  for (const auto& t : simulate_fast_controlled(b.spec, StateVector::basis(4, 3)))
    CHECK(t.residual < 1e-9);
}

TEST_CASE("approximate_diagonal", "[constructions][approx]") {
  std::vector<cplx> exact;
  for (int i = 0; i < 4; ++i) exact.push_back(unit_root(i * 3, 8));
  const auto e = approximate_diagonal(ComplexMatrix::diagonal(exact), 2, 2, 8);
  CHECK(e.error < 1e-12);
  CHECK(e.ebits == Approx(2 * 3.0));

  std::mt19937_64 rng(31);
  const auto phases = testing::random_phases(4, rng);
  const auto r = approximate_diagonal(ComplexMatrix::diagonal(phases), 2, 2, 256);
  CHECK(r.error <= 2 * std::sin(kPi / 256) + 1e-12);
  CHECK(max_abs_diff(target_unitary(r.spec), r.rounded) < 1e-9);
  // simulate at a coarse N: the group C_N^dB has N^dB elements
  const auto coarse = approximate_diagonal(ComplexMatrix::diagonal(phases), 2, 2, 4);
  CHECK(coarse.spec.order() == 16);
  const auto in = StateVector::random(4, rng);
  const auto want = fastlocc::apply(coarse.rounded, in.amplitudes());
  for (const auto& t : simulate_fast_controlled(coarse.spec, in)) {
    if (t.skipped) continue;
    CHECK(equal_up_to_global_phase(t.final_state->amplitudes(), want).has_value());
  }

  CHECK(code_of([] { approximate_diagonal(pauli_x(), 1, 2, 4); }) == Errc::precondition_violated);
}
