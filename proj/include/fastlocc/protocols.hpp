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
#include "fastlocc/hadamard.hpp"
#include "fastlocc/matrix.hpp"
#include "fastlocc/predicates.hpp"

// Global state ordering for every simulation: A (x) a (x) b (x) B with
// dimensions dA, N, N, dB; flat index ((A*N + a)*N + b)*dB + B.

namespace fastlocc {

/// sum_i P_i (x) V_{subset[i]}. Without projectors, P_i = |i><i| on a
/// |subset|-dimensional A. `v` holds V_k for every group element k.
struct ControlledUnitarySpec {
  AbelianCycleStructure group;
  std::vector<std::size_t> subset;
  std::vector<ComplexMatrix> v;
  std::vector<ComplexMatrix> projectors;

  std::size_t d_a() const;
  std::size_t d_b() const;
  std::size_t order() const noexcept { return group.order(); }
  ComplexMatrix projector(std::size_t i) const;

  friend bool operator==(const ControlledUnitarySpec&, const ControlledUnitarySpec&) = default;
};

/// Throws invalid_spec when V is not an ordinary unitary representation, the
/// subset is malformed, or the projectors are not an orthogonal resolution
/// of the identity.
void validate_controlled_spec(const ControlledUnitarySpec& spec, double tol = kDefaultTol);

struct SimultaneousDiagonalization {
  ComplexMatrix w;  // columns: common eigenbasis
  std::vector<std::vector<cplx>> diagonals;
};

/// Common eigenbasis of commuting normal matrices. Already-diagonal input
/// keeps W = I. Throws invalid_representation when no common basis is found.
SimultaneousDiagonalization diagonalize_commuting(std::span<const ComplexMatrix> ops,
                                                  double tol = kDefaultTol);

/// Builds a spec from V_k given either for every group element or only for
/// k in subset; the latter is extended to the whole group through the irrep
/// labels of the common eigenbasis. Validates the result.
ControlledUnitarySpec make_controlled_spec(AbelianCycleStructure group,
                                           std::vector<std::size_t> subset,
                                           std::vector<ComplexMatrix> v,
                                           std::vector<ComplexMatrix> projectors = {},
                                           double tol = kDefaultTol);

/// sum_f c(f) U(f) (x) V(f) with {U(f) (x) V(f)} a projective representation.
struct DoubleGroupSpec {
  FiniteGroupTable group;
  std::vector<ComplexMatrix> u;
  std::vector<ComplexMatrix> v;
  std::vector<cplx> c;
  FactorSystem factor;
  TCPair tc;

  std::size_t d_a() const { return u.empty() ? 0 : u.front().rows(); }
  std::size_t d_b() const { return v.empty() ? 0 : v.front().rows(); }
  std::size_t order() const noexcept { return group.order(); }
  ComplexMatrix gamma(std::size_t f) const;

  friend bool operator==(const DoubleGroupSpec&, const DoubleGroupSpec&) = default;
};

/// Throws invalid_spec on size mismatches, a factor system that does not
/// match the matrices, or a T/C pair of the wrong size.
void validate_double_spec(const DoubleGroupSpec& spec, double tol = kDefaultTol);

/// Throws invalid_spec if the sum is not unitary.
ComplexMatrix target_unitary(const ControlledUnitarySpec& spec, double tol = kDefaultTol);
ComplexMatrix target_unitary(const DoubleGroupSpec& spec, double tol = kDefaultTol);

struct BranchTranscript {
  std::size_t l = 0;
  std::size_t m = 0;
  double probability = 0.0;
  bool skipped = false;  // probability <= 1e-12
  std::string corrections;
  std::optional<StateVector> final_state;
  double theta = 0.0;
  double residual = 0.0;
};

/// Linear map from the AB input to the AB output of one branch, before and
/// after the corrections. `g` is the correction label (l for controlled
/// protocols, the group element for double-group ones).
struct BranchMap {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t g = 0;
  ComplexMatrix pre_correction;
  ComplexMatrix post_correction;
};

inline constexpr double kBranchCutoff = 1e-12;

enum class ControlledProtocol { fast, slow };
enum class DoubleProtocol { fast, slow, symmetrized };

/// Each run asserts that every branch with probability above kBranchCutoff
/// equals target_unitary * input up to a phase; otherwise throws
/// protocol_violation naming the branch.
std::vector<BranchTranscript> simulate_fast_controlled(const ControlledUnitarySpec& spec,
                                                       const StateVector& input,
                                                       double tol = kDefaultTol);
std::vector<BranchTranscript> simulate_slow_controlled(const ControlledUnitarySpec& spec,
                                                       const StateVector& input,
                                                       double tol = kDefaultTol);
std::vector<BranchTranscript> simulate_fast_double(const DoubleGroupSpec& spec,
                                                   const StateVector& input,
                                                   double tol = kDefaultTol);
std::vector<BranchTranscript> simulate_slow_double(const DoubleGroupSpec& spec,
                                                   const StateVector& input,
                                                   double tol = kDefaultTol);
std::vector<BranchTranscript> simulate_symmetrized(const DoubleGroupSpec& spec,
                                                   const StateVector& input,
                                                   double tol = kDefaultTol);

std::vector<BranchMap> branch_maps(const ControlledUnitarySpec& spec, ControlledProtocol protocol);
std::vector<BranchMap> branch_maps(const DoubleGroupSpec& spec, DoubleProtocol protocol,
                                   double tol = kDefaultTol);

struct CorrectionTarget {
  std::size_t g = 0;
  cplx phase{1.0, 0.0};  // conj of the permutation entry picked up by the branch
};

/// g = row of the nonzero entry in column m of the l-th exchange
/// certificate. Throws invalid_state when that certificate is missing.
CorrectionTarget correction_map(const ExchangeReport& exchange, std::size_t l, std::size_t m);

/// Same lookup for the symmetrized protocol, through P~_l P.
CorrectionTarget symmetrized_correction_map(const ExchangeReport& exchange,
                                            const PermutationCertificate& p, std::size_t l,
                                            std::size_t m);

/// Resource sum_j |j>|j> / sqrt(N), optionally weighted by D.
std::vector<cplx> resource_state(std::size_t n, std::span<const cplx> d = {});

/// log2 of the group order backing the resource.
double entanglement_cost(const ControlledUnitarySpec& spec);
double entanglement_cost(const DoubleGroupSpec& spec);

enum class EmbeddingMode { extension, compression };

/// S maps A (x) E to A' (x) E'; index a*dE + e on both sides.
struct EmbeddingMap {
  EmbeddingMode mode = EmbeddingMode::extension;
  ComplexMatrix s;
  std::size_t d_a = 0;
  std::size_t d_e = 0;
  std::size_t d_a_prime = 0;
  std::size_t d_e_prime = 0;
  /// S restricted to E = |0>: a (dA' dE') x dA isometry.
  ComplexMatrix isometry() const;
};

struct EmbeddingCheck {
  EmbeddingMap map;
  ComplexMatrix u_prime;        // on E' (x) B
  ComplexMatrix composite;      // S^dagger (I (x) U') S on A (x) E (x) B
  double circuit_residual = 0.0;   // vs U (x) |0>_E on E = 0 inputs
  double isometry_residual = 0.0;  // (V^dagger (x) I)(I (x) U')(V (x) I) vs U
};

/// Extension: U' = U_0 (+) R with R acting on the (dE' - dA) extra levels of
/// E' together with B. Throws invalid_dims on mismatched sizes.
EmbeddingCheck embed_unitary(const ComplexMatrix& u, std::size_t d_a, std::size_t d_b,
                             const ComplexMatrix& r_block, double tol = kDefaultTol);

struct CompressionResult {
  ControlledUnitarySpec compressed;
  EmbeddingCheck check;
};

/// Replaces the projectors by rank-one controls on E' (one level per subset
/// entry), with S|k,r>|0> = |r>|k> on a basis adapted to the projectors.
CompressionResult compress_controlled(const ControlledUnitarySpec& spec,
                                      double tol = kDefaultTol);

}  // namespace fastlocc
