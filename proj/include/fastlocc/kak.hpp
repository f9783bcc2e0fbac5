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

#include "fastlocc/matrix.hpp"

namespace fastlocc {

/// Local-equivalence coordinates of a two-qubit gate, folded into
/// pi/4 >= alpha >= beta >= gamma >= 0.
struct KakInvariants {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Throws invalid_input unless u is a 4x4 unitary (within 1e-8).
KakInvariants kak_invariants(const ComplexMatrix& u);

/// exp(i (a XX + b YY + c ZZ))
ComplexMatrix kak_canonical_gate(double a, double b, double c);

double kak_distance(const KakInvariants& x, const KakInvariants& y);

}  // namespace fastlocc
