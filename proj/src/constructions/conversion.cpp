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
#include <numbers>
#include <string>

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"

namespace fastlocc {
namespace {

bool is_diagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && std::abs(m(r, c)) > tol) return false;
  return true;
}

// c(f) = prod_s exp(-pi i f_s (r_s mod 2 + f_s) / r_s) / sqrt(r_s)
cplx product_coeff(const AbelianCycleStructure& group, std::size_t f) {
  const auto t = group.tuple(f);
  cplx c = 1.0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    const auto r = static_cast<std::int64_t>(group.cycles()[s]);
    const auto fs = static_cast<std::int64_t>(t[s]);
    c *= unit_root(-fs * (r % 2 + fs), 2 * r) / std::sqrt(static_cast<double>(r));
  }
  return c;
}

}  // namespace

ConversionResult theorem4_convert(const ControlledUnitarySpec& spec, double tol) {
  validate_controlled_spec(spec, tol);
  const AbelianCycleStructure& group = spec.group;
  const std::size_t n = group.order();
  const std::size_t da = spec.d_a();
  const std::size_t db = spec.d_b();
  for (std::size_t k : spec.subset)
    if (!is_diagonal(spec.v[k], tol))
      throw Error(Errc::precondition_violated,
                  "V_" + std::to_string(k) + " is not diagonal; diagonalize first");

  ConversionResult out;
  out.basis = ComplexMatrix::identity(db);
  out.labels.resize(db);
  for (std::size_t b = 0; b < db; ++b) {
    std::vector<cplx> values;
    for (std::size_t k : spec.subset) values.push_back(spec.v[k](b, b));
    const auto q = match_irrep(group, spec.subset, values, tol);
    if (!q)
      throw Error(Errc::invalid_representation,
                  "diagonal entry " + std::to_string(b) + " matches no irrep of the group");
    out.labels[b] = *q;
  }

  out.c.resize(n);
  out.q.resize(n);
  out.r.resize(n);
  out.w = ComplexMatrix(da * db, da * db);
  for (std::size_t f = 0; f < n; ++f) {
    out.c[f] = product_coeff(group, f);
    ComplexMatrix qf(da, da);
    for (std::size_t i = 0; i < spec.subset.size(); ++i)
      qf += weighted_pair_phase(group, f, spec.subset[i]) * spec.projector(i);
    std::vector<cplx> rd(db);
    for (std::size_t b = 0; b < db; ++b) rd[b] = weighted_pair_phase(group, f, out.labels[b]);
    out.q[f] = std::move(qf);
    out.r[f] = ComplexMatrix::diagonal(rd);
    out.w += out.c[f] * tensor_product(out.q[f], out.r[f]);
  }

  out.zeta = ComplexMatrix(n, db);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < db; ++b) {
      cplx z = 0.0;
      for (std::size_t f = 0; f < n; ++f)
        z += out.c[f] * weighted_pair_phase(group, f, k) *
             weighted_pair_phase(group, f, out.labels[b]);
      out.zeta(k, b) = z;
    }
  out.alpha = 1.0;
  for (std::size_t r : group.cycles()) {
    const auto rr = static_cast<std::int64_t>(r);
    cplx a = 0.0;
    // exp(-pi i (j + h)^2 / r) with h = (r mod 2)/2, as a root of unity of order 8r
    for (std::int64_t j = 0; j < rr; ++j) {
      const std::int64_t twice = 2 * j + rr % 2;
      a += unit_root(-(twice * twice) % (8 * rr), 8 * rr);
    }
    out.alpha *= a;
  }

  ComplexMatrix ma(da, da);
  // V_k(0,0) is 1 when q_0 = 0; otherwise it carries the phase of label q_0
  for (std::size_t i = 0; i < spec.subset.size(); ++i)
    ma += (spec.v[spec.subset[i]](0, 0) / out.zeta(spec.subset[i], 0)) * spec.projector(i);
  std::vector<cplx> mb(db);
  for (std::size_t b = 0; b < db; ++b) mb[b] = out.zeta(0, 0) / out.zeta(0, b);
  out.m_a = std::move(ma);
  out.m_b = ComplexMatrix::diagonal(mb);

  const ComplexMatrix u = target_unitary(spec, tol);
  out.residual = max_abs_diff(tensor_product(out.m_a, out.m_b) * out.w, u);

  const FiniteGroupTable table = group.table();
  out.converted = make_double_spec(table, out.q, out.r, out.c, tol);
  out.conditions = check_fast_conditions(table, out.converted.factor, out.c, tol);
  return out;
}

ConversionResult convert_controlled(const ControlledUnitarySpec& spec, double tol) {
  validate_controlled_spec(spec, tol);
  std::vector<ComplexMatrix> ops;
  for (std::size_t k : spec.subset) ops.push_back(spec.v[k]);
  const SimultaneousDiagonalization diag = diagonalize_commuting(ops, tol);
  ControlledUnitarySpec rotated = spec;
  const ComplexMatrix wd = diag.w.adjoint();
  for (auto& m : rotated.v) m = wd * m * diag.w;
  // clean the rounding noise off the rotated subset matrices
  for (std::size_t k : rotated.subset)
    rotated.v[k] = ComplexMatrix::diagonal(rotated.v[k].diagonal_entries());
  ConversionResult out = theorem4_convert(rotated, tol);
  out.basis = diag.w;
  return out;
}

}  // namespace fastlocc
