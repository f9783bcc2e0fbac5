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
#include <vector>

#include "fastlocc/matrix.hpp"

namespace fastlocc {

/// A complex permutation matrix stored as row -> column plus the unimodular
/// entry found in each row: M(r, permutation[r]) = phases[r].
struct PermutationCertificate {
  std::vector<std::size_t> permutation;
  std::vector<cplx> phases;

  static PermutationCertificate identity(std::size_t n);

  std::size_t size() const noexcept { return permutation.size(); }

  friend bool operator==(const PermutationCertificate&, const PermutationCertificate&) = default;
  ComplexMatrix to_matrix() const;
  /// Row holding the nonzero entry of column `col`.
  std::size_t row_of_column(std::size_t col) const;
  /// Certificate of this->to_matrix() * rhs.to_matrix().
  PermutationCertificate then(const PermutationCertificate& rhs) const;
  bool is_identity(double tol = kDefaultTol) const;
};

/// max|M^dagger M - I| <= tol. Throws invalid_shape for non-square input.
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// Unitary with every |entry| = 1/sqrt(N) within tol.
bool is_complex_hadamard(const ComplexMatrix& m, double tol = kDefaultTol);

/// Entries below tol count as zero, entries within tol of modulus one count as
/// unimodular; any other entry, or a row/column without exactly one
/// unimodular entry, yields nullopt.
std::optional<PermutationCertificate> is_complex_permutation(
    const ComplexMatrix& m, double tol = kDefaultTol);

/// theta in (-pi, pi] with a = e^{i theta} b, referenced on the
/// largest-magnitude entry of b and checked by max-norm residual.
std::optional<double> equal_up_to_global_phase(const ComplexMatrix& a,
                                               const ComplexMatrix& b,
                                               double tol = kDefaultTol);
std::optional<double> equal_up_to_global_phase(std::span<const cplx> a,
                                               std::span<const cplx> b,
                                               double tol = kDefaultTol);

/// Reshuffled matrix R((a,a'),(b,b')) = U((a,b),(a',b')), dA^2 x dB^2.
ComplexMatrix reshuffle(const ComplexMatrix& u, std::size_t da, std::size_t db);

/// Singular values of the reshuffled matrix, descending.
std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& u,
                                                  std::size_t da, std::size_t db);

/// Number of singular values of reshuffle(u) above tol.
std::size_t operator_schmidt_rank(const ComplexMatrix& u, std::size_t da,
                                  std::size_t db, double tol = kDefaultTol);

/// Schmidt rank of a bipartite pure state psi on (da x db).
std::size_t state_schmidt_rank(std::span<const cplx> psi, std::size_t da,
                               std::size_t db, double tol = kDefaultTol);

}  // namespace fastlocc
