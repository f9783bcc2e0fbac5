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

#include <algorithm>
#include <cmath>

#include "fastlocc/kernels.hpp"

namespace fastlocc::kernels {
namespace {

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void gemv_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t m,
                 std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx acc{};
    const cplx* arow = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_diff_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(x[i] - y[i]));
  return best;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", gemm_scalar, gemv_scalar,
                                 dotc_scalar, axpy_scalar, max_abs_diff_scalar};
  return table;
}

}  // namespace fastlocc::kernels
