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
#include <cmath>
#include <numbers>

#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/groups.hpp"
#include "generators.hpp"

using namespace fastlocc;

namespace {

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

// per-cycle Z^{-m_s} tensor product, built independently of weighted_pair_phase
ComplexMatrix z_tensor(const AbelianCycleStructure& g, std::size_t m) {
  const auto t = g.tuple(m);
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t s = 0; s < t.size(); ++s)
    out = tensor_product(out, phase_gate(g.cycles()[s], -static_cast<std::int64_t>(t[s])));
  return out;
}

}  // namespace

TEST_CASE("abelian_group", "[groups]") {
  const auto klein = abelian_group({2, 2});
  const std::size_t a = klein.structure.index(std::vector<std::size_t>{1, 0});
  const std::size_t b = klein.structure.index(std::vector<std::size_t>{0, 1});
  CHECK(klein.table.mul(a, b) == klein.structure.index(std::vector<std::size_t>{1, 1}));
  CHECK(klein.table.order() == 4);
  CHECK(klein.table.is_abelian());
  // lexicographic numbering
  CHECK(klein.structure.tuple(2) == std::vector<std::size_t>{1, 0});

  const auto trivial = abelian_group({1});
  CHECK(trivial.table.order() == 1);
  CHECK(trivial.table.identity() == 0);

  const auto c3 = abelian_group({3});
  CHECK(c3.table.mul(2, 2) == 1);
  CHECK(c3.table.inverse(1) == 2);

  CHECK(code_of([] { abelian_group({}); }) == Errc::invalid_input);
  CHECK(code_of([] { abelian_group({2, 0}); }) == Errc::invalid_input);
  CHECK(code_of([&] { klein.structure.index(std::vector<std::size_t>{2, 0}); }) == Errc::invalid_input);
}

TEST_CASE("explicit tables are validated", "[groups]") {
  CHECK(code_of([] { FiniteGroupTable::from_table({{0, 1}, {1, 1}}); }) == Errc::invalid_input);
  CHECK(code_of([] { FiniteGroupTable::from_table({}); }) == Errc::invalid_input);
  // Latin square without associativity (order 5 quasigroup with identity)
  const std::vector<std::vector<std::size_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { FiniteGroupTable::from_table(loop); }) == Errc::invalid_input);
  const auto c4 = FiniteGroupTable::from_table(abelian_group({4}).table.table());
  CHECK(c4 == abelian_group({4}).table);
}

TEST_CASE("dihedral_group", "[groups]") {
  const auto d2 = dihedral_group(2);
  for (std::size_t f = 0; f < 4; ++f) CHECK(d2.mul(f, f) == 0);
  const auto d3 = dihedral_group(3);
  CHECK(d3.order() == 6);
  CHECK(d3.mul(1, 3) != d3.mul(3, 1));
  CHECK_FALSE(d3.is_abelian());
  for (std::size_t n = 2; n <= 8; ++n) CHECK(dihedral_group(n).identity() == 0);
  CHECK(code_of([] { dihedral_group(1); }) == Errc::invalid_input);
}

TEST_CASE("dihedral matrices follow the table", "[groups][property]") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto table = dihedral_group(n);
    const auto mats = dihedral_matrices(n);
    REQUIRE(mats.size() == 2 * n);
    CHECK(mats[0] == ComplexMatrix::identity(2));
    for (std::size_t a = 0; a < 2 * n; ++a)
      for (std::size_t b = 0; b < 2 * n; ++b)
        CHECK(max_abs_diff(mats[a] * mats[b], mats[table.mul(a, b)]) < 1e-12);
    CHECK(factor_system_from_rep(mats, table).is_trivial());
  }
}

TEST_CASE("GroupDescriptor builds tables", "[groups]") {
  CHECK(GroupDescriptor::abelian({2, 3}).build() == abelian_group({2, 3}).table);
  CHECK(GroupDescriptor::dihedral(4).build() == dihedral_group(4));
  const auto t = abelian_group({3}).table.table();
  CHECK(GroupDescriptor::explicit_table(t).build().table() == t);
}

TEST_CASE("weighted_pair_phase", "[groups]") {
  const AbelianCycleStructure klein({2, 2});
  CHECK(std::abs(weighted_pair_phase(klein, std::vector<std::size_t>{1, 0},
                                     std::vector<std::size_t>{1, 1}) -
                 cplx(-1.0)) < 1e-15);
  for (std::size_t k = 0; k < 4; ++k) CHECK(weighted_pair_phase(klein, k, 0) == cplx(1.0));
  const AbelianCycleStructure c5({5});
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t m = 0; m < 5; ++m)
      CHECK(std::abs(weighted_pair_phase(c5, k, m) -
                     std::polar(1.0, -2 * std::numbers::pi * double(k * m) / 5)) < 1e-14);
  CHECK(code_of([&] {
          weighted_pair_phase(klein, std::vector<std::size_t>{2, 0}, std::vector<std::size_t>{0, 0});
        }) == Errc::invalid_input);
}

TEST_CASE("weighted_pair_phase matches the tensor-product Z gate", "[groups][property]") {
  for (const auto& cycles : testing::all_cycle_structures(16)) {
    const AbelianCycleStructure g(cycles);
    for (std::size_t m = 0; m < g.order(); ++m) {
      const ComplexMatrix z = z_tensor(g, m);
      for (std::size_t k = 0; k < g.order(); ++k)
        CHECK(std::abs(weighted_pair_phase(g, k, m) - z(k, k)) < 1e-12);
    }
  }
}

TEST_CASE("character_table", "[groups]") {
  CHECK(character_table(AbelianCycleStructure({2})) == ComplexMatrix{{1, 1}, {1, -1}});
  CHECK(character_table(AbelianCycleStructure({1})) == ComplexMatrix{{1.0}});
  const ComplexMatrix k = character_table(AbelianCycleStructure({2, 2}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(k(i, j).imag() == 0.0);
      CHECK(std::abs(k(i, j).real()) == 1.0);
    }
}

TEST_CASE("character tables are closed Hadamard matrices", "[groups][property]") {
  for (const auto& cycles : testing::all_cycle_structures(32)) {
    const AbelianCycleStructure g(cycles);
    const std::size_t n = g.order();
    const ComplexMatrix k = character_table(g);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(k(0, i) == cplx(1.0));
      CHECK(k(i, 0) == cplx(1.0));
    }
    const ComplexMatrix kk = k * k.adjoint();
    CHECK(max_abs_diff(kk, cplx(double(n)) * ComplexMatrix::identity(n)) < 1e-12 * n);
    // closure: row i * row j is row add(i, j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = g.add(i, j);
        double d = 0.0;
        for (std::size_t c = 0; c < n; ++c) d = std::max(d, std::abs(k(i, c) * k(j, c) - k(r, c)));
        CHECK(d < 1e-12);
      }
  }
}

TEST_CASE("factor_system_from_rep", "[groups]") {
  const auto c2 = abelian_group({2}).table;
  const std::vector<ComplexMatrix> ordinary{ComplexMatrix::identity(2), pauli_z()};
  CHECK(factor_system_from_rep(ordinary, c2).is_trivial());

  const ComplexMatrix xz = pauli_x() * pauli_z();
  const std::vector<ComplexMatrix> one_side{ComplexMatrix::identity(2), xz};
  const FactorSystem lam = factor_system_from_rep(one_side, c2);
  CHECK(std::abs(lam(1, 1) - cplx(-1.0)) < 1e-12);
  CHECK(lam.is_standard(0));
  CHECK(is_normalized_factor_system(lam, 2));
  // on both sides the two signs cancel
  const std::vector<ComplexMatrix> both{ComplexMatrix::identity(4), tensor_product(xz, xz)};
  CHECK(factor_system_from_rep(both, c2).is_trivial());

  const std::vector<ComplexMatrix> broken{ComplexMatrix::identity(2), pauli_x() + pauli_z()};
  CHECK(code_of([&] { factor_system_from_rep(broken, c2); }) == Errc::invalid_input);
  // unitary but not a representation of C3
  const auto c3 = abelian_group({3}).table;
  const std::vector<ComplexMatrix> bad{ComplexMatrix::identity(2), pauli_x(), pauli_z()};
  CHECK(code_of([&] { factor_system_from_rep(bad, c3); }) == Errc::not_a_projective_representation);
}

TEST_CASE("is_normalized_factor_system", "[groups]") {
  CHECK(is_normalized_factor_system(FactorSystem::trivial(3), 3));
  std::vector<cplx> vals(16, 1.0);
  vals[5] = std::polar(1.0, 1.0);
  CHECK_FALSE(is_normalized_factor_system(FactorSystem(4, vals), 4));
  std::vector<cplx> nonstd(4, 1.0);
  nonstd[1] = -1.0;  // lambda(e, 1)
  CHECK_FALSE(is_normalized_factor_system(FactorSystem(2, nonstd), 2));
}

TEST_CASE("factor systems of random projective reps satisfy the cocycle law", "[groups][property]") {
  std::mt19937_64 rng(41);
  // Pauli-group reps of C2 x C2 with random phases on each element
  const auto klein = abelian_group({2, 2}).table;
  const std::vector<ComplexMatrix> paulis{ComplexMatrix::identity(2), pauli_x(), pauli_z(),
                                          pauli_x() * pauli_z()};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ComplexMatrix> mats;
    for (const auto& p : paulis) mats.push_back(testing::random_phase(rng) * p);
    const FactorSystem lam = factor_system_from_rep(mats, klein);
    CHECK(lam.cocycle_residual(klein) < 1e-8);
  }
}

TEST_CASE("make_projective_rep", "[groups]") {
  const auto klein = abelian_group({2, 2}).table;
  const std::vector<ComplexMatrix> paulis{ComplexMatrix::identity(2), pauli_x(), pauli_z(),
                                          pauli_x() * pauli_z()};
  const ProjectiveRep rep = make_projective_rep(klein, paulis);
  CHECK_FALSE(rep.factor.is_trivial());
  CHECK(is_normalized_factor_system(rep.factor, 4));
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h)
      CHECK(max_abs_diff(rep.matrices[g] * rep.matrices[h],
                         rep.factor(g, h) * rep.matrices[klein.mul(g, h)]) < 1e-12);
}

TEST_CASE("match_irrep picks the smallest consistent label", "[groups]") {
  const AbelianCycleStructure c4({4});
  // only k = 2 observed: value -1 is consistent with q = 1 and q = 3
  const std::vector<std::size_t> subset{2};
  const std::vector<cplx> values{-1.0};
  const auto q = match_irrep(c4, subset, values);
  REQUIRE(q);
  CHECK(*q == 1);
  const std::vector<cplx> nothing{cplx(0, 1)};
  CHECK_FALSE(match_irrep(c4, subset, nothing));
}
