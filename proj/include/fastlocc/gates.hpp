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

#include "fastlocc/matrix.hpp"

namespace fastlocc {

/// e^{2 pi i k / n}, exact at multiples of a quarter turn.
cplx unit_root(std::int64_t k, std::int64_t n);

/// F = (1/sqrt N) sum_{m,k} e^{2 pi i m k / N} |m><k|
ComplexMatrix fourier_matrix(std::size_t n);

/// X^power with X|j> = |j - 1 mod N>.
ComplexMatrix shift_gate(std::size_t n, std::int64_t power);

/// Z^power, Z = diag(e^{2 pi i k / N}).
ComplexMatrix phase_gate(std::size_t n, std::int64_t power);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace fastlocc
