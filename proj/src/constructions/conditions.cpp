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

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"

namespace fastlocc {

ComplexMatrix build_c_matrix(const FiniteGroupTable& group, const FactorSystem& factor,
                             std::span<const cplx> c) {
  const std::size_t n = group.order();
  if (c.size() != n)
    throw Error(Errc::invalid_input, "need " + std::to_string(n) + " coefficients, got " +
                                         std::to_string(c.size()));
  if (factor.order() != n) throw Error(Errc::invalid_input, "factor system order mismatch");
  ComplexMatrix out(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t g_inv = group.inverse(g);
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t h = group.mul(g_inv, f);
      out(g, f) = factor(g, h) * c[h];
    }
  }
  return out;
}

std::optional<int> FastConditionReport::first_failure() const noexcept {
  if (!equal_magnitude) return 1;
  if (!c_unitary) return 2;
  if (!rows_group) return 3;
  return std::nullopt;
}

FastConditionReport check_fast_conditions(const FiniteGroupTable& group,
                                          const FactorSystem& factor, std::span<const cplx> c,
                                          double tol) {
  FastConditionReport report;
  const std::size_t n = group.order();
  report.c_matrix = build_c_matrix(group, factor, c);
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (const cplx& z : c)
    report.magnitude_deviation = std::max(report.magnitude_deviation, std::abs(std::abs(z) - target));
  report.equal_magnitude = report.magnitude_deviation <= tol;
  if (!report.equal_magnitude)
    report.diagnostics.push_back("(i) coefficient magnitudes deviate from 1/sqrt(N) by " +
                                 std::to_string(report.magnitude_deviation));

  report.unitarity_residual = max_abs_diff(report.c_matrix.adjoint() * report.c_matrix,
                                           ComplexMatrix::identity(n));
  report.c_unitary = report.unitarity_residual <= tol;
  if (!report.c_unitary)
    report.diagnostics.push_back("(ii) C is not unitary; residual " +
                                 std::to_string(report.unitarity_residual));

  if (report.equal_magnitude && report.c_unitary) {
    const double s = std::sqrt(static_cast<double>(n));
    try {
      report.rows_group = rows_form_group(cplx(s, 0.0) * report.c_matrix, tol);
    } catch (const Error& e) {
      report.diagnostics.push_back(std::string("(iii) ") + e.what());
    }
    if (!report.rows_group)
      report.diagnostics.push_back("(iii) rows of the normalized C do not form a group");
  }
  return report;
}

DoubleGroupSpec make_double_spec(FiniteGroupTable group, std::vector<ComplexMatrix> u,
                                 std::vector<ComplexMatrix> v, std::vector<cplx> c, double tol) {
  const std::size_t n = group.order();
  if (u.size() != n || v.size() != n || c.size() != n)
    throw Error(Errc::invalid_spec, "need U(f), V(f), c(f) for all " + std::to_string(n) +
                                        " group elements");
  std::vector<ComplexMatrix> gammas;
  gammas.reserve(n);
  for (std::size_t f = 0; f < n; ++f) gammas.push_back(tensor_product(u[f], v[f]));
  FactorSystem factor = factor_system_from_rep(gammas, group, tol);
  const FastConditionReport report = check_fast_conditions(group, factor, c, tol);

  DoubleGroupSpec spec;
  spec.tc.c = report.c_matrix;
  if (report.rows_group) {
    spec.tc.t = cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0) * report.rows_group->normalized;
  } else {
    spec.tc.t = fourier_matrix(n);
  }
  spec.group = std::move(group);
  spec.u = std::move(u);
  spec.v = std::move(v);
  spec.c = std::move(c);
  spec.factor = std::move(factor);
  validate_double_spec(spec, tol);
  return spec;
}

SearchProblem make_search_problem(FiniteGroupTable group, std::vector<ComplexMatrix> u,
                                  std::vector<ComplexMatrix> v, double tol) {
  const std::size_t n = group.order();
  if (u.size() != n || v.size() != n)
    throw Error(Errc::invalid_spec, "need U(f) and V(f) for all " + std::to_string(n) +
                                        " group elements");
  std::vector<ComplexMatrix> gammas;
  gammas.reserve(n);
  for (std::size_t f = 0; f < n; ++f) gammas.push_back(tensor_product(u[f], v[f]));
  FactorSystem factor = factor_system_from_rep(gammas, group, tol);
  return {std::move(group), std::move(u), std::move(v), std::move(factor)};
}

}  // namespace fastlocc
