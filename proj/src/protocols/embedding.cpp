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

#include <cmath>
#include <string>

#include "fastlocc/error.hpp"
#include "fastlocc/protocols.hpp"

namespace fastlocc {
namespace {

// Fills the unset columns of s (flagged false in `set`) with an orthonormal
// completion drawn from the standard basis by Gram-Schmidt.
void complete_unitary(ComplexMatrix& s, std::vector<bool> set) {
  const std::size_t n = s.rows();
  std::vector<std::vector<cplx>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (!set[c]) continue;
    std::vector<cplx> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = s(r, c);
    basis.push_back(std::move(col));
  }
  std::size_t next = 0;
  for (std::size_t cand = 0; cand < n; ++cand) {
    while (next < n && set[next]) ++next;
    if (next == n) break;
    std::vector<cplx> v(n);
    v[cand] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const cplx proj = inner(b, v);
        for (std::size_t r = 0; r < n; ++r) v[r] -= proj * b[r];
      }
    const double nv = norm(v);
    if (nv < 1e-6) continue;
    for (auto& z : v) z /= nv;
    for (std::size_t r = 0; r < n; ++r) s(r, next) = v[r];
    set[next] = true;
    basis.push_back(std::move(v));
  }
}

ComplexMatrix isometry_of(const ComplexMatrix& s, std::size_t d_a, std::size_t d_e) {
  ComplexMatrix v(s.rows(), d_a);
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t k = 0; k < d_a; ++k) v(r, k) = s(r, k * d_e);
  return v;
}

void run_circuit(EmbeddingCheck& check, const ComplexMatrix& u, std::size_t d_b) {
  const EmbeddingMap& map = check.map;
  const ComplexMatrix ib = ComplexMatrix::identity(d_b);
  const ComplexMatrix middle =
      tensor_product(ComplexMatrix::identity(map.d_a_prime), check.u_prime);
  const ComplexMatrix s_b = tensor_product(map.s, ib);
  check.composite = s_b.adjoint() * middle * s_b;

  double worst = 0.0;
  for (std::size_t k = 0; k < map.d_a; ++k)
    for (std::size_t q = 0; q < d_b; ++q) {
      const std::size_t col = (k * map.d_e) * d_b + q;
      for (std::size_t row = 0; row < check.composite.rows(); ++row) {
        const std::size_t a = row / (map.d_e * d_b);
        const std::size_t e = (row / d_b) % map.d_e;
        const std::size_t p = row % d_b;
        const cplx want = e == 0 ? u(a * d_b + p, k * d_b + q) : cplx(0.0);
        worst = std::max(worst, std::abs(check.composite(row, col) - want));
      }
    }
  check.circuit_residual = worst;

  const ComplexMatrix v_b = tensor_product(map.isometry(), ib);
  check.isometry_residual = max_abs_diff(v_b.adjoint() * middle * v_b, u);
}

}  // namespace

ComplexMatrix EmbeddingMap::isometry() const { return isometry_of(s, d_a, d_e); }

EmbeddingCheck embed_unitary(const ComplexMatrix& u, std::size_t d_a, std::size_t d_b,
                             const ComplexMatrix& r_block, double tol) {
  if (d_a == 0 || d_b == 0 || !u.is_square() || u.rows() != d_a * d_b)
    throw Error(Errc::invalid_dims, "U must be (dA*dB) x (dA*dB)");
  if (!r_block.is_square() || r_block.rows() % d_b != 0)
    throw Error(Errc::invalid_dims, "R block must be square with a multiple of dB rows");
  if (!is_unitary(u, tol)) throw Error(Errc::invalid_input, "U is not unitary");
  if (!r_block.empty() && !is_unitary(r_block, tol))
    throw Error(Errc::invalid_input, "R block is not unitary");
  const std::size_t d_r = r_block.rows() / d_b;

  EmbeddingCheck check;
  EmbeddingMap& map = check.map;
  map.mode = EmbeddingMode::extension;
  map.d_a = d_a;
  map.d_a_prime = d_a;
  map.d_e_prime = d_a + d_r;
  map.d_e = map.d_e_prime;
  const std::size_t dim = map.d_a * map.d_e;
  map.s = ComplexMatrix(dim, dim);
  std::vector<bool> set(dim, false);
  for (std::size_t k = 0; k < d_a; ++k) {
    map.s(k, k * map.d_e) = 1.0;  // |k>_A|0>_E -> |0>_A'|k>_E'
    set[k * map.d_e] = true;
  }
  complete_unitary(map.s, set);

  const std::size_t de = map.d_e_prime;
  check.u_prime = ComplexMatrix(de * d_b, de * d_b);
  for (std::size_t e1 = 0; e1 < de; ++e1)
    for (std::size_t b1 = 0; b1 < d_b; ++b1)
      for (std::size_t e2 = 0; e2 < de; ++e2)
        for (std::size_t b2 = 0; b2 < d_b; ++b2) {
          cplx x = 0.0;
          if (e1 < d_a && e2 < d_a)
            x = u(e1 * d_b + b1, e2 * d_b + b2);
          else if (e1 >= d_a && e2 >= d_a)
            x = r_block((e1 - d_a) * d_b + b1, (e2 - d_a) * d_b + b2);
          check.u_prime(e1 * d_b + b1, e2 * d_b + b2) = x;
        }
  run_circuit(check, u, d_b);
  return check;
}

CompressionResult compress_controlled(const ControlledUnitarySpec& spec, double tol) {
  validate_controlled_spec(spec, tol);
  const ComplexMatrix u = target_unitary(spec, tol);
  const std::size_t d_a = spec.d_a();
  const std::size_t d_b = spec.d_b();
  const std::size_t n_s = spec.subset.size();

  // Orthonormal basis |k,r> of each projector's range, by Gram-Schmidt on
  // its columns.
  std::vector<std::vector<std::vector<cplx>>> ranges(n_s);
  std::size_t max_rank = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_s; ++i) {
    const ComplexMatrix p = spec.projector(i);
    for (std::size_t c = 0; c < d_a; ++c) {
      std::vector<cplx> v(d_a);
      for (std::size_t r = 0; r < d_a; ++r) v[r] = p(r, c);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : ranges[i]) {
          const cplx proj = inner(b, v);
          for (std::size_t r = 0; r < d_a; ++r) v[r] -= proj * b[r];
        }
      const double nv = norm(v);
      if (nv < 1e-6) continue;
      for (auto& z : v) z /= nv;
      ranges[i].push_back(std::move(v));
    }
    max_rank = std::max(max_rank, ranges[i].size());
    total += ranges[i].size();
  }
  if (total != d_a) throw Error(Errc::invalid_spec, "projector ranks do not add up to dA");

  CompressionResult result;
  result.compressed = spec;
  result.compressed.projectors.clear();

  EmbeddingCheck& check = result.check;
  EmbeddingMap& map = check.map;
  map.mode = EmbeddingMode::compression;
  map.d_a = d_a;
  map.d_e_prime = n_s;
  map.d_a_prime = max_rank;
  while ((map.d_a_prime * n_s) % d_a != 0) ++map.d_a_prime;
  map.d_e = map.d_a_prime * n_s / d_a;
  const std::size_t dim = d_a * map.d_e;
  map.s = ComplexMatrix(dim, dim);
  std::vector<bool> set(dim, false);
  // Column for input |w>_A|0>_E where w = sum_x w_x |x>: S maps
  // |k,r>|0> -> |r>_A'|k>_E', so S(:, x*dE) = sum_{k,r} conj(w_{k,r}[x]) |r,k>.
  for (std::size_t x = 0; x < d_a; ++x) {
    for (std::size_t i = 0; i < n_s; ++i)
      for (std::size_t r = 0; r < ranges[i].size(); ++r)
        map.s(r * map.d_e_prime + i, x * map.d_e) = std::conj(ranges[i][r][x]);
    set[x * map.d_e] = true;
  }
  complete_unitary(map.s, set);
  if (!is_unitary(map.s, 1e-8))
    throw Error(Errc::invalid_state, "failed to complete S to a unitary");

  check.u_prime = target_unitary(result.compressed, tol);
  run_circuit(check, u, d_b);
  return result;
}

}  // namespace fastlocc
