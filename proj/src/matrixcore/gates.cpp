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

#include "fastlocc/gates.hpp"

#include <cmath>
#include <numbers>

#include "fastlocc/error.hpp"

namespace fastlocc {

namespace {

void require_dimension(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_dimension, "gate dimension must be >= 1");
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

cplx unit_root(std::int64_t k, std::int64_t n) {
  if (n <= 0) throw Error(Errc::invalid_dimension, "unit_root: n must be positive");
  const std::int64_t t = mod(k, n);
  if ((4 * t) % n == 0) {
    switch ((4 * t) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix fourier_matrix(std::size_t n) {
  require_dimension(n);
  const auto nn = static_cast<std::int64_t>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (std::int64_t m = 0; m < nn; ++m)
    for (std::int64_t k = 0; k < nn; ++k) f(m, k) = scale * unit_root(m * k, nn);
  return f;
}

ComplexMatrix shift_gate(std::size_t n, std::int64_t power) {
  require_dimension(n);
  const auto nn = static_cast<std::int64_t>(n);
  ComplexMatrix x(n, n);
  for (std::int64_t j = 0; j < nn; ++j) x(mod(j - power, nn), j) = 1.0;
  return x;
}

ComplexMatrix phase_gate(std::size_t n, std::int64_t power) {
  require_dimension(n);
  const auto nn = static_cast<std::int64_t>(n);
  ComplexMatrix z(n, n);
  for (std::int64_t k = 0; k < nn; ++k) z(k, k) = unit_root(k * power, nn);
  return z;
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace fastlocc
