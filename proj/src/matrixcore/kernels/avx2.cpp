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

// Built with -mavx2 -mfma. Nothing in this file may run before the dispatcher
// has confirmed CPU support.

#include <algorithm>
#include <cmath>

#include "fastlocc/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define FASTLOCC_HAVE_AVX2 1
#endif

namespace fastlocc::kernels {

#ifdef FASTLOCC_HAVE_AVX2
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (scalar a) * [b0, b1]
inline __m256d mul_broadcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bsw));
}

// [a0*b0, a1*b1]
inline __m256d mul_lanes(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);
  const __m256d aim = _mm256_permute_pd(a, 0xF);
  const __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

// [conj(x0)*y0, conj(x1)*y1]
inline __m256d mulc_lanes(__m256d x, __m256d y) {
  const __m256d xre = _mm256_movedup_pd(x);
  const __m256d xim = _mm256_permute_pd(x, 0xF);
  const __m256d ysw = _mm256_permute_pd(y, 0x5);
  return _mm256_fmsubadd_pd(xre, y, _mm256_mul_pd(xim, ysw));
}

inline cplx hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const cplx* brow = b + p * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d c0 = load2(crow + j);
        __m256d c1 = load2(crow + j + 2);
        c0 = _mm256_add_pd(c0, mul_broadcast(ar, ai, load2(brow + j)));
        c1 = _mm256_add_pd(c1, mul_broadcast(ar, ai, load2(brow + j + 2)));
        store2(crow + j, c0);
        store2(crow + j + 2, c1);
      }
      for (; j + 2 <= n; j += 2) {
        store2(crow + j, _mm256_add_pd(load2(crow + j),
                                       mul_broadcast(ar, ai, load2(brow + j))));
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void gemv_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t m,
               std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      acc0 = _mm256_add_pd(acc0, mul_lanes(load2(arow + j), load2(x + j)));
      acc1 = _mm256_add_pd(acc1, mul_lanes(load2(arow + j + 2), load2(x + j + 2)));
    }
    for (; j + 2 <= n; j += 2)
      acc0 = _mm256_add_pd(acc0, mul_lanes(load2(arow + j), load2(x + j)));
    cplx acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, mulc_lanes(load2(x + i), load2(y + i)));
    acc1 = _mm256_add_pd(acc1, mulc_lanes(load2(x + i + 2), load2(y + i + 2)));
  }
  for (; i + 2 <= n; i += 2)
    acc0 = _mm256_add_pd(acc0, mulc_lanes(load2(x + i), load2(y + i)));
  cplx acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    store2(y + i, _mm256_add_pd(load2(y + i), mul_broadcast(ar, ai, load2(x + i))));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_diff_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(load2(x + i), load2(y + i));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::sqrt(std::max(lanes[0], lanes[2]));
  for (; i < n; ++i) out = std::max(out, std::abs(x[i] - y[i]));
  return out;
}

}  // namespace

const KernelTable* avx2_kernels_if_compiled() noexcept {
  static const KernelTable table{"avx2", gemm_avx2, gemv_avx2, dotc_avx2,
                                 axpy_avx2, max_abs_diff_avx2};
  return &table;
}
#else
const KernelTable* avx2_kernels_if_compiled() noexcept { return nullptr; }
#endif

}  // namespace fastlocc::kernels
