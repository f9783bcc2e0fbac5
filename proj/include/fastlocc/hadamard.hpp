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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastlocc/groups.hpp"
#include "fastlocc/matrix.hpp"
#include "fastlocc/predicates.hpp"

namespace fastlocc {

struct TCWitnesses {
  ComplexMatrix k_hat;
  PermutationCertificate l;
  PermutationCertificate m;
  std::vector<cplx> d;

  friend bool operator==(const TCWitnesses&, const TCWitnesses&) = default;
};

/// T (complex Hadamard scaled by 1/sqrt(N)) and C (unitary), optionally with
/// the character-table witnesses they were built from.
struct TCPair {
  ComplexMatrix t;
  ComplexMatrix c;
  std::optional<TCWitnesses> provenance;

  friend bool operator==(const TCPair&, const TCPair&) = default;
};

/// Unimodular entries, K K^dagger = N I, and rows closed under entrywise
/// product (including an all-ones row).
bool is_character_table(const ComplexMatrix& k_hat, double tol = kDefaultTol);

/// T = L K / sqrt(N), C = M K D / sqrt(N). Throws invalid_character_table when
/// K fails is_character_table and invalid_input on size mismatches.
TCPair build_tc(const ComplexMatrix& k_hat, const PermutationCertificate& l,
                const PermutationCertificate& m, std::span<const cplx> d,
                double tol = kDefaultTol);

/// diag(conj(row l of t_hat)). Throws invalid_input when l is out of range.
ComplexMatrix z_row_gate(const ComplexMatrix& t_hat, std::size_t l);

struct ExchangeFailure {
  std::size_t l = 0;
  double residual = 0.0;
};

struct ExchangeReport {
  /// Certificate for C Z_l C^dagger, indexed by l; complete only when ok().
  std::vector<PermutationCertificate> certificates;
  std::optional<ExchangeFailure> failure;
  bool ok() const noexcept { return !failure.has_value(); }
};

/// Distance of m from the nearest complex permutation pattern: the worst
/// entry that is neither ~0 nor ~unimodular in the largest-entry layout.
double permutation_residual(const ComplexMatrix& m);

/// Certifies C Z_l C^dagger as a complex permutation for every l, stopping at
/// the first failure. Throws precondition_violated if T is not Hadamard or C
/// is not unitary.
ExchangeReport verify_exchange(const TCPair& tc, double tol = kDefaultTol);

struct RowGroup {
  FiniteGroupTable table;
  std::vector<cplx> q;  // row phases
  std::vector<cplx> r;  // column phases
  ComplexMatrix normalized;  // Q C R / |C(0,0)|, ones in row 0 and column 0
};

/// Normalizes the first row and column to 1 and checks closure of the rows
/// under entrywise product, matching each product to the unique row within
/// tol. Throws invalid_input on a zero entry and condition_violated when the
/// entry magnitudes differ.
std::optional<RowGroup> rows_form_group(const ComplexMatrix& c_hat, double tol = kDefaultTol);

/// P with a = P b, i.e. every row of a is a unimodular multiple of a distinct
/// row of b. nullopt if no such matching exists.
std::optional<PermutationCertificate> match_rows(const ComplexMatrix& a, const ComplexMatrix& b,
                                                 double tol = kDefaultTol);

struct Theorem2Report {
  ExchangeReport exchange;
  /// Group formed by the Z_l up to phases (Z_l Z_l' ~ Z_{mul(l,l')}).
  std::optional<FiniteGroupTable> z_group;
  /// C = P T D.
  std::optional<PermutationCertificate> p;
  std::vector<cplx> d;
  double decomposition_residual = 0.0;
  std::string failure;
  bool passed() const noexcept { return failure.empty(); }
};

/// Throws precondition_violated unless t_hat / sqrt(N) is complex Hadamard, c
/// is unitary, and the first row of c has no zero entry.
Theorem2Report theorem2_check(const ComplexMatrix& t_hat, const ComplexMatrix& c,
                              double tol = kDefaultTol);

}  // namespace fastlocc
