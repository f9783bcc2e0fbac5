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

// Tensor-network-free helpers for small multipartite pure states stored as
// flat vectors, first site most significant.

#include <cstddef>
#include <span>
#include <vector>

#include "fastlocc/matrix.hpp"

namespace fastlocc::detail {

/// Applies op to the listed sites (first listed site most significant in
/// op's index).
void apply_on_sites(std::vector<cplx>& state, std::span<const std::size_t> dims,
                    std::span<const std::size_t> sites, const ComplexMatrix& op);

/// Component of state with site fixed to value, as a vector on the remaining
/// sites (unnormalized).
std::vector<cplx> slice(std::span<const cplx> state, std::span<const std::size_t> dims,
                        std::size_t site, std::size_t value);

/// dims with entry `site` removed.
std::vector<std::size_t> drop_site(std::span<const std::size_t> dims, std::size_t site);

/// psi_left (x) mid (x) psi_right for inputs living on (A, B) with a middle
/// register inserted: returns sum psi(A,B) |A> mid |B>.
std::vector<cplx> insert_middle(std::span<const cplx> psi, std::size_t d_a, std::size_t d_b,
                                std::span<const cplx> mid);

double norm_squared(std::span<const cplx> v);

}  // namespace fastlocc::detail
