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
#include <vector>

#include "fastlocc/matrix.hpp"

namespace fastlocc {

/// Dense multiplication table of a finite group. Elements are the indices
/// 0..N-1; nothing else is assumed about their meaning.
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;

  /// Validates the table: Latin square, a two-sided identity, inverses, and
  /// associativity (exhaustively for N <= 64). Throws invalid_input.
  static FiniteGroupTable from_table(std::vector<std::vector<std::size_t>> mult);

  std::size_t order() const noexcept { return mult_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  bool is_abelian() const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return mult_; }

  friend bool operator==(const FiniteGroupTable&, const FiniteGroupTable&) = default;

 private:
  std::vector<std::vector<std::size_t>> mult_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Direct product C_{r_1} x ... x C_{r_eta}. Element indices enumerate the
/// eta-tuples in lexicographic order, so index 1 is (0,...,0,1).
class AbelianCycleStructure {
 public:
  AbelianCycleStructure() = default;
  /// Throws invalid_input for an empty list or a zero cycle length.
  explicit AbelianCycleStructure(std::vector<std::size_t> cycles);

  const std::vector<std::size_t>& cycles() const noexcept { return cycles_; }
  std::size_t rank() const noexcept { return cycles_.size(); }
  std::size_t order() const noexcept { return order_; }

  std::vector<std::size_t> tuple(std::size_t index) const;
  /// Throws invalid_input for wrong length or out-of-range components.
  std::size_t index(std::span<const std::size_t> tuple) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t subtract(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  /// t with sum_s k_s m_s / r_s = t / N (mod 1): the weighted pairing as an
  /// integer exponent of the N-th root of unity.
  std::size_t pairing_exponent(std::size_t k, std::size_t m) const;

  /// Builds the N x N table; intended for N up to a few hundred.
  FiniteGroupTable table() const;

  friend bool operator==(const AbelianCycleStructure&, const AbelianCycleStructure&) = default;

 private:
  std::vector<std::size_t> cycles_;
  std::size_t order_ = 0;
};

struct AbelianGroup {
  AbelianCycleStructure structure;
  FiniteGroupTable table;
};

AbelianGroup abelian_group(std::vector<std::size_t> cycles);

/// D_n of order 2n: indices 0..n-1 are rotations by 2 pi f / n, indices
/// n..2n-1 reflections, composed as the 2x2 matrices of dihedral_matrices.
/// Throws invalid_input for n < 2.
FiniteGroupTable dihedral_group(std::size_t n);

/// The real 2x2 irreducible representation of D_n, in dihedral_group order.
std::vector<ComplexMatrix> dihedral_matrices(std::size_t n);

/// How a group was specified: as abelian cycles, as D_n, or by its table.
struct GroupDescriptor {
  enum class Kind { abelian, dihedral, table };
  Kind kind = Kind::abelian;
  std::vector<std::size_t> cycles;                 // abelian
  std::size_t n = 0;                               // dihedral
  std::vector<std::vector<std::size_t>> table;     // explicit

  static GroupDescriptor abelian(std::vector<std::size_t> cycles);
  static GroupDescriptor dihedral(std::size_t n);
  static GroupDescriptor explicit_table(std::vector<std::vector<std::size_t>> table);

  FiniteGroupTable build() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// exp(-2 pi i sum_s k_s m_s / r_s): the (k,k) entry of the tensor product of
/// per-cycle Z_s^{-m_s} gates.
cplx weighted_pair_phase(const AbelianCycleStructure& cycles,
                         std::span<const std::size_t> k,
                         std::span<const std::size_t> m);
cplx weighted_pair_phase(const AbelianCycleStructure& cycles, std::size_t k,
                         std::size_t m);

/// K = tensor product of sqrt(r_s) F_{r_s}: row q, column k holds
/// exp(2 pi i sum_s q_s k_s / r_s).
ComplexMatrix character_table(const AbelianCycleStructure& cycles);

/// Smallest label q (index order) whose irrep exp(2 pi i sum_s q_s k_s / r_s)
/// matches values[i] at k = subset[i] for every i, within tol.
std::optional<std::size_t> match_irrep(const AbelianCycleStructure& cycles,
                                       std::span<const std::size_t> subset,
                                       std::span<const cplx> values,
                                       double tol = kDefaultTol);

/// Unit-modulus phases lambda(g,h) with Gamma(g)Gamma(h) = lambda(g,h)Gamma(gh).
class FactorSystem {
 public:
  FactorSystem() = default;
  FactorSystem(std::size_t order, std::vector<cplx> values);
  static FactorSystem trivial(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  cplx operator()(std::size_t g, std::size_t h) const { return values_[g * order_ + h]; }
  std::span<const cplx> values() const noexcept { return values_; }

  /// lambda(e,f) = lambda(f,e) = 1 for all f.
  bool is_standard(std::size_t identity, double tol = kDefaultTol) const;
  /// max over g,h,k of |lambda(g,h)lambda(gh,k) - lambda(g,hk)lambda(h,k)|.
  double cocycle_residual(const FiniteGroupTable& group) const;
  bool is_trivial(double tol = kDefaultTol) const;

  friend bool operator==(const FactorSystem&, const FactorSystem&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<cplx> values_;
};

/// lambda(g,h) = tr(Gamma(gh)^dagger Gamma(g) Gamma(h)) / d, accepted only if
/// max|Gamma(g)Gamma(h) - lambda Gamma(gh)| <= tol for every pair.
/// Throws invalid_input on malformed matrices and
/// not_a_projective_representation when the residual check fails.
FactorSystem factor_system_from_rep(std::span<const ComplexMatrix> matrices,
                                    const FiniteGroupTable& group,
                                    double tol = kDefaultTol);

/// Standard, and every lambda(g,h)^N = 1 within tol.
bool is_normalized_factor_system(const FactorSystem& factor, std::size_t n,
                                 double tol = kDefaultTol);

struct ProjectiveRep {
  FiniteGroupTable group;
  std::vector<ComplexMatrix> matrices;
  FactorSystem factor;
};

ProjectiveRep make_projective_rep(FiniteGroupTable group,
                                  std::vector<ComplexMatrix> matrices,
                                  double tol = kDefaultTol);

}  // namespace fastlocc
