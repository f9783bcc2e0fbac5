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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fastlocc/groups.hpp"
#include "fastlocc/hadamard.hpp"
#include "fastlocc/kak.hpp"
#include "fastlocc/matrix.hpp"
#include "fastlocc/protocols.hpp"

namespace fastlocc {

/// C(g, f) = lambda(g, g^-1 f) c(g^-1 f).
ComplexMatrix build_c_matrix(const FiniteGroupTable& group, const FactorSystem& factor,
                             std::span<const cplx> c);

struct FastConditionReport {
  bool equal_magnitude = false;  // (i)
  bool c_unitary = false;        // (ii)
  std::optional<RowGroup> rows_group;  // (iii)
  ComplexMatrix c_matrix;
  double magnitude_deviation = 0.0;
  double unitarity_residual = 0.0;
  std::vector<std::string> diagnostics;

  bool passed() const noexcept { return equal_magnitude && c_unitary && rows_group.has_value(); }
  /// 1, 2 or 3 for the first condition that fails; nullopt on a pass.
  std::optional<int> first_failure() const noexcept;
};

/// Runs (i) equal magnitudes 1/sqrt(N), (ii) unitarity of C, (iii) rows of
/// the normalized sqrt(N) C form a group. Later conditions are only tried
/// when the earlier ones hold.
FastConditionReport check_fast_conditions(const FiniteGroupTable& group,
                                          const FactorSystem& factor, std::span<const cplx> c,
                                          double tol = kDefaultTol);

/// Double-group spec with factor system, C from build_c_matrix, and
/// T = C'/sqrt(N) when condition (iii) holds (otherwise the Fourier matrix,
/// which still serves the slow protocol).
DoubleGroupSpec make_double_spec(FiniteGroupTable group, std::vector<ComplexMatrix> u,
                                 std::vector<ComplexMatrix> v, std::vector<cplx> c,
                                 double tol = kDefaultTol);

/// Representation without coefficients, as consumed by theorem3_search.
struct SearchProblem {
  FiniteGroupTable group;
  std::vector<ComplexMatrix> u;
  std::vector<ComplexMatrix> v;
  FactorSystem factor;

  friend bool operator==(const SearchProblem&, const SearchProblem&) = default;
};

SearchProblem make_search_problem(FiniteGroupTable group, std::vector<ComplexMatrix> u,
                                  std::vector<ComplexMatrix> v, double tol = kDefaultTol);

struct SearchLimits {
  std::uint64_t budget = 10'000'000;
  unsigned workers = 0;  // 0: hardware concurrency
  bool allow_large = false;  // required for N > 4
};

struct SearchSurvivor {
  std::vector<std::size_t> k;  // exponent of exp(2 pi i k / N^2), per element
  std::vector<cplx> c;
  ComplexMatrix unitary;
  std::optional<KakInvariants> kak;  // 4x4 only
  bool product = false;              // operator Schmidt rank 1
};

struct SearchResult {
  std::vector<SearchSurvivor> survivors;
  std::uint64_t candidates = 0;  // size of the full grid
  std::uint64_t evaluated = 0;
  bool truncated = false;
};

/// Enumerates c(f) = exp(2 pi i k(f)/N^2)/sqrt(N) with c(e) = 1/sqrt(N) and
/// keeps the sets passing check_fast_conditions. Throws precondition_violated
/// for a factor system that is not normalized, or N > 4 without allow_large.
SearchResult theorem3_search(const SearchProblem& problem, const SearchLimits& limits = {},
                             double tol = kDefaultTol);

/// Coefficients for an ordinary representation of C_N.
std::vector<cplx> cyclic_coeffs(std::size_t n);

/// The 2n coefficients for the dihedral representation; throws invalid_input
/// unless n >= 2, m >= 1 and gcd(m, n) = 1.
std::vector<cplx> dihedral_coeffs(std::size_t n, std::size_t m);

/// Builtin example specs and auxiliary fixtures.
using FixtureSpec = std::variant<ControlledUnitarySpec, DoubleGroupSpec, SearchProblem>;

struct ExampleFixture {
  std::string name;
  GroupDescriptor group;
  FixtureSpec spec;
};

using FixtureParams = std::map<std::string, long long>;

std::vector<std::string> example_names();

/// Throws unknown_fixture for an unknown name and invalid_input for bad
/// parameters (ex1i: N; ex3: N, m; ex6: N; ex8: n, m).
ExampleFixture example_fixture(const std::string& name, const FixtureParams& params = {});

struct ConversionResult {
  std::vector<ComplexMatrix> q;  // on A
  std::vector<ComplexMatrix> r;  // on B
  std::vector<cplx> c;
  ComplexMatrix m_a;
  ComplexMatrix m_b;
  ComplexMatrix zeta;  // N x dB, entry (k, b)
  cplx alpha{1.0, 0.0};
  std::vector<std::size_t> labels;  // q_b as group indices
  ComplexMatrix w;                  // sum_f c(f) Q(f) (x) R(f)
  ComplexMatrix basis;              // B basis the V_k were diagonalized in
  double residual = 0.0;            // max |(M_A (x) M_B) W - U'|
  DoubleGroupSpec converted;
  FastConditionReport conditions;
};

/// Requires every V_k (k in the subset) to be diagonal; throws
/// precondition_violated otherwise and invalid_representation when a
/// diagonal sequence matches no irrep.
ConversionResult theorem4_convert(const ControlledUnitarySpec& spec, double tol = kDefaultTol);

/// Diagonalizes the V_k first and converts the rotated spec; U' in the
/// residual is then (I (x) basis^dagger) U (I (x) basis).
ConversionResult convert_controlled(const ControlledUnitarySpec& spec, double tol = kDefaultTol);

struct PhaseApproximation {
  ControlledUnitarySpec spec;
  std::size_t m = 0;
  double error = 0.0;
  double ebits = 0.0;
};

/// diag(1, e^{i phi}) approximated by diag(1, e^{2 pi i m / N}) over C_N.
PhaseApproximation approximate_phase_subset(double phi, std::size_t n);

struct DiagonalApproximation {
  ControlledUnitarySpec spec;
  ComplexMatrix rounded;
  double error = 0.0;
  double ebits = 0.0;
};

/// Rounds every phase of a diagonal unitary to an N-th root of unity and
/// writes the result as a controlled subset of C_N^dB. Throws
/// precondition_violated on non-diagonal input.
DiagonalApproximation approximate_diagonal(const ComplexMatrix& u_diag, std::size_t d_a,
                                           std::size_t d_b, std::size_t n,
                                           double tol = kDefaultTol);

}  // namespace fastlocc
