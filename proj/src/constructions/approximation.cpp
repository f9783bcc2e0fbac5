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

std::size_t nearest_root(double phi, std::size_t n) {
  const double turns = phi / (2.0 * std::numbers::pi) * static_cast<double>(n);
  const auto nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((std::llround(turns) % nn) + nn) % nn);
}

}  // namespace

PhaseApproximation approximate_phase_subset(double phi, std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_input, "N must be >= 2");
  if (!std::isfinite(phi)) throw Error(Errc::invalid_input, "phi must be finite");
  PhaseApproximation out;
  out.m = nearest_root(phi, n);
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<ComplexMatrix> v;
  for (std::size_t k = 0; k < n; ++k)
    v.push_back(ComplexMatrix::diagonal(
        std::vector<cplx>{1.0, unit_root(static_cast<std::int64_t>(k), nn)}));
  if (out.m == 0) {
    // both control values land on the identity element
    out.spec = make_controlled_spec(AbelianCycleStructure({n}), {0}, std::move(v),
                                    {ComplexMatrix::identity(2)});
  } else {
    out.spec = make_controlled_spec(AbelianCycleStructure({n}), {0, out.m}, std::move(v));
  }
  out.error = std::abs(std::polar(1.0, phi) - unit_root(static_cast<std::int64_t>(out.m), nn));
  out.ebits = std::log2(static_cast<double>(n));
  return out;
}

DiagonalApproximation approximate_diagonal(const ComplexMatrix& u_diag, std::size_t d_a,
                                           std::size_t d_b, std::size_t n, double tol) {
  if (n < 2) throw Error(Errc::invalid_input, "N must be >= 2");
  if (d_a == 0 || d_b == 0 || !u_diag.is_square() || u_diag.rows() != d_a * d_b)
    throw Error(Errc::invalid_dims, "U must be (dA*dB) x (dA*dB)");
  for (std::size_t r = 0; r < u_diag.rows(); ++r)
    for (std::size_t c = 0; c < u_diag.cols(); ++c)
      if (r != c && std::abs(u_diag(r, c)) > tol)
        throw Error(Errc::precondition_violated, "U is not diagonal in the product basis");
  std::size_t order = 1;
  for (std::size_t b = 0; b < d_b; ++b) {
    if (order > (std::size_t{1} << 22) / n)
      throw Error(Errc::invalid_input, "group C_N^dB is too large");
    order *= n;
  }

  AbelianCycleStructure group(std::vector<std::size_t>(d_b, n));
  const auto nn = static_cast<std::int64_t>(n);
  DiagonalApproximation out;
  out.rounded = ComplexMatrix(u_diag.rows(), u_diag.cols());
  std::vector<std::size_t> element(d_a);
  for (std::size_t a = 0; a < d_a; ++a) {
    std::vector<std::size_t> t(d_b);
    for (std::size_t b = 0; b < d_b; ++b) {
      const std::size_t x = a * d_b + b;
      t[b] = nearest_root(std::arg(u_diag(x, x)), n);
      out.rounded(x, x) = unit_root(static_cast<std::int64_t>(t[b]), nn);
    }
    element[a] = group.index(t);
  }
  out.error = max_abs_diff(u_diag, out.rounded);

  std::vector<std::size_t> subset;
  std::vector<ComplexMatrix> projectors;
  for (std::size_t a = 0; a < d_a; ++a) {
    std::size_t slot = 0;
    while (slot < subset.size() && subset[slot] != element[a]) ++slot;
    if (slot == subset.size()) {
      subset.push_back(element[a]);
      projectors.emplace_back(d_a, d_a);
    }
    projectors[slot](a, a) = 1.0;
  }
  std::vector<ComplexMatrix> v;
  v.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    const auto t = group.tuple(k);
    std::vector<cplx> d(d_b);
    for (std::size_t b = 0; b < d_b; ++b) d[b] = unit_root(static_cast<std::int64_t>(t[b]), nn);
    v.push_back(ComplexMatrix::diagonal(d));
  }
  out.spec = make_controlled_spec(std::move(group), std::move(subset), std::move(v),
                                  std::move(projectors));
  out.ebits = static_cast<double>(d_b) * std::log2(static_cast<double>(n));
  return out;
}

}  // namespace fastlocc
