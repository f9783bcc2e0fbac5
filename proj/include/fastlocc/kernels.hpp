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

// Complex-double inner loops, with a portable scalar reference and an AVX2+FMA
// variant selected once at runtime. Both tables are reachable directly so the
// equivalence tests can compare them.

#include <complex>
#include <cstddef>
#include <string_view>

namespace fastlocc::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// c[m x n] = a[m x k] * b[k x n], all row-major, c must not alias a or b.
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);
  /// y[m] = a[m x n] * x[n]
  void (*gemv)(const cplx* a, const cplx* x, cplx* y, std::size_t m,
               std::size_t n);
  /// sum conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  /// y += alpha * x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// max_i |x_i - y_i|
  double (*max_abs_diff)(const cplx* x, const cplx* y, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_table() noexcept;

/// The table used by the library. Picks AVX2 when available unless the
/// FASTLOCC_FORCE_SCALAR environment variable is set to a non-empty value.
const KernelTable& active() noexcept;

}  // namespace fastlocc::kernels
