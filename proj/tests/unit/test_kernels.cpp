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

#include <catch_amalgamated.hpp>
#include <random>
#include <vector>

#include "fastlocc/kernels.hpp"

using fastlocc::kernels::cplx;
using fastlocc::kernels::KernelTable;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops", "[kernels]") {
  const KernelTable& s = fastlocc::kernels::scalar_table();
  std::mt19937_64 rng(1);
  const std::size_t m = 3, k = 5, n = 4;
  const auto a = random_vec(m * k, rng);
  const auto b = random_vec(k * n, rng);
  std::vector<cplx> c(m * n);
  s.gemm(a.data(), b.data(), c.data(), m, k, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < k; ++t) acc += a[i * k + t] * b[t * n + j];
      CHECK(std::abs(c[i * n + j] - acc) < 1e-12);
    }
  const auto x = random_vec(7, rng);
  const auto y = random_vec(7, rng);
  cplx dot = 0.0;
  for (std::size_t i = 0; i < 7; ++i) dot += std::conj(x[i]) * y[i];
  CHECK(std::abs(s.dotc(x.data(), y.data(), 7) - dot) < 1e-12);
}

TEST_CASE("AVX2 kernels agree with the scalar reference", "[kernels]") {
  const KernelTable* v = fastlocc::kernels::avx2_table();
  if (v == nullptr) SKIP("AVX2 kernels unavailable on this build or CPU");
  const KernelTable& s = fastlocc::kernels::scalar_table();
  std::mt19937_64 rng(2);
  // sizes chosen to hit the vector body and every odd tail length
  for (std::size_t m = 1; m <= 9; ++m)
    for (std::size_t k = 1; k <= 9; ++k)
      for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u}) {
        const auto a = random_vec(m * k, rng);
        const auto b = random_vec(k * n, rng);
        std::vector<cplx> c1(m * n), c2(m * n);
        s.gemm(a.data(), b.data(), c1.data(), m, k, n);
        v->gemm(a.data(), b.data(), c2.data(), m, k, n);
        CHECK(max_diff(c1, c2) < 1e-12);
      }
  for (std::size_t n = 0; n <= 33; ++n) {
    const auto x = random_vec(n, rng);
    const auto y = random_vec(n, rng);
    CHECK(std::abs(s.dotc(x.data(), y.data(), n) - v->dotc(x.data(), y.data(), n)) < 1e-12);
    // the vector path skips hypot's extra rounding care
    CHECK(std::abs(s.max_abs_diff(x.data(), y.data(), n) - v->max_abs_diff(x.data(), y.data(), n)) <
          1e-14);
    auto y1 = y, y2 = y;
    const cplx alpha(0.3, -1.7);
    s.axpy(alpha, x.data(), y1.data(), n);
    v->axpy(alpha, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) < 1e-12);
    for (std::size_t rows : {1u, 4u, 7u}) {
      const auto a = random_vec(rows * n, rng);
      std::vector<cplx> z1(rows), z2(rows);
      s.gemv(a.data(), x.data(), z1.data(), rows, n);
      v->gemv(a.data(), x.data(), z2.data(), rows, n);
      CHECK(max_diff(z1, z2) < 1e-12);
    }
  }
}

TEST_CASE("active table is one of the two", "[kernels]") {
  const auto& act = fastlocc::kernels::active();
  const bool known = act.name == fastlocc::kernels::scalar_table().name ||
                     (fastlocc::kernels::avx2_table() && act.name == fastlocc::kernels::avx2_table()->name);
  CHECK(known);
}
