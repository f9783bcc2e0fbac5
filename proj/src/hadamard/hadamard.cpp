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

#include "fastlocc/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fastlocc/error.hpp"

namespace fastlocc {
namespace {

constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

cplx unit_phase(cplx z) { return z / std::abs(z); }

std::span<const cplx> row_span(const ComplexMatrix& m, std::size_t r) {
  return {m.data().data() + r * m.cols(), m.cols()};
}

// Unique row of m within tol (max-norm) of v, or kNoRow.
std::size_t find_row(const ComplexMatrix& m, std::span<const cplx> v, double tol) {
  std::size_t found = kNoRow;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (max_abs_diff(row_span(m, r), v) < tol) {
      if (found != kNoRow) return kNoRow;
      found = r;
    }
  }
  return found;
}

std::vector<cplx> entrywise(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

ComplexMatrix scaled(const ComplexMatrix& m, double s) { return cplx(s, 0.0) * m; }

}  // namespace

bool is_character_table(const ComplexMatrix& k_hat, double tol) {
  if (!k_hat.is_square() || k_hat.empty()) return false;
  const std::size_t n = k_hat.rows();
  for (const cplx& z : k_hat.data())
    if (std::abs(std::abs(z) - 1.0) > tol) return false;
  if (!is_unitary(scaled(k_hat, 1.0 / std::sqrt(static_cast<double>(n))), tol)) return false;
  const std::vector<cplx> ones(n, 1.0);
  if (find_row(k_hat, ones, tol) == kNoRow) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (find_row(k_hat, entrywise(row_span(k_hat, i), row_span(k_hat, j)), tol) == kNoRow)
        return false;
  return true;
}

TCPair build_tc(const ComplexMatrix& k_hat, const PermutationCertificate& l,
                const PermutationCertificate& m, std::span<const cplx> d, double tol) {
  if (!is_character_table(k_hat, tol))
    throw Error(Errc::invalid_character_table, "rows of K do not form a group of characters");
  const std::size_t n = k_hat.rows();
  if (l.size() != n || m.size() != n || d.size() != n)
    throw Error(Errc::invalid_input, "L, M and D must all have size " + std::to_string(n));
  for (const cplx& z : d)
    if (std::abs(std::abs(z) - 1.0) > tol) throw Error(Errc::invalid_input, "D must be unimodular");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  const ComplexMatrix dm = ComplexMatrix::diagonal(std::vector<cplx>(d.begin(), d.end()));
  TCPair out;
  out.t = scaled(l.to_matrix() * k_hat, s);
  out.c = scaled(m.to_matrix() * k_hat * dm, s);
  out.provenance = TCWitnesses{k_hat, l, m, std::vector<cplx>(d.begin(), d.end())};
  return out;
}

ComplexMatrix z_row_gate(const ComplexMatrix& t_hat, std::size_t l) {
  if (l >= t_hat.rows())
    throw Error(Errc::invalid_input, "row index " + std::to_string(l) + " out of range");
  std::vector<cplx> diag(t_hat.cols());
  for (std::size_t f = 0; f < t_hat.cols(); ++f) diag[f] = std::conj(t_hat(l, f));
  return ComplexMatrix::diagonal(diag);
}

double permutation_residual(const ComplexMatrix& m) {
  double residual = 0.0;
  std::vector<bool> used(m.cols(), false);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > std::abs(m(r, best))) best = c;
    if (used[best]) residual = std::max(residual, 1.0);
    used[best] = true;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double a = std::abs(m(r, c));
      residual = std::max(residual, c == best ? std::abs(a - 1.0) : a);
    }
  }
  return residual;
}

ExchangeReport verify_exchange(const TCPair& tc, double tol) {
  const std::size_t n = tc.t.rows();
  if (!tc.t.is_square() || !tc.c.is_square() || tc.c.rows() != n)
    throw Error(Errc::precondition_violated, "T and C must be square of equal size");
  if (!is_complex_hadamard(tc.t, tol))
    throw Error(Errc::precondition_violated, "T is not a complex Hadamard matrix");
  if (!is_unitary(tc.c, tol)) throw Error(Errc::precondition_violated, "C is not unitary");
  const ComplexMatrix t_hat = scaled(tc.t, std::sqrt(static_cast<double>(n)));
  const ComplexMatrix c_dag = tc.c.adjoint();
  ExchangeReport report;
  report.certificates.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    const ComplexMatrix p = tc.c * z_row_gate(t_hat, l) * c_dag;
    auto cert = is_complex_permutation(p, tol);
    if (!cert) {
      report.failure = ExchangeFailure{l, permutation_residual(p)};
      return report;
    }
    report.certificates.push_back(std::move(*cert));
  }
  return report;
}

std::optional<RowGroup> rows_form_group(const ComplexMatrix& c_hat, double tol) {
  if (!c_hat.is_square() || c_hat.empty())
    throw Error(Errc::invalid_shape, "rows_form_group needs a non-empty square matrix");
  const std::size_t n = c_hat.rows();
  const double mu = std::abs(c_hat(0, 0));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const double a = std::abs(c_hat(g, f));
      if (a <= tol)
        throw Error(Errc::invalid_input, "zero entry at (" + std::to_string(g) + "," +
                                             std::to_string(f) + ")");
      if (std::abs(a - mu) > tol * std::max(1.0, mu))
        throw Error(Errc::condition_violated,
                    "entries do not share one magnitude (condition (i)) at (" +
                        std::to_string(g) + "," + std::to_string(f) + ")");
    }
  RowGroup out;
  out.r.resize(n);
  out.q.resize(n);
  for (std::size_t f = 0; f < n; ++f) out.r[f] = std::conj(unit_phase(c_hat(0, f)));
  for (std::size_t g = 0; g < n; ++g)
    out.q[g] = unit_phase(c_hat(0, 0)) / unit_phase(c_hat(g, 0));
  out.normalized = ComplexMatrix(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      out.normalized(g, f) = out.q[g] * c_hat(g, f) * out.r[f] / mu;

  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = find_row(
          out.normalized, entrywise(row_span(out.normalized, i), row_span(out.normalized, j)), tol);
      if (k == kNoRow) return std::nullopt;
      mult[i][j] = k;
    }
  try {
    out.table = FiniteGroupTable::from_table(std::move(mult));
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

std::optional<PermutationCertificate> match_rows(const ComplexMatrix& a, const ComplexMatrix& b,
                                                 double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  PermutationCertificate cert;
  cert.permutation.assign(n, 0);
  cert.phases.assign(n, 0.0);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < n && !matched; ++j) {
      if (used[j]) continue;
      std::size_t pivot = 0;
      for (std::size_t k = 1; k < b.cols(); ++k)
        if (std::abs(b(j, k)) > std::abs(b(j, pivot))) pivot = k;
      if (std::abs(b(j, pivot)) <= tol) continue;
      const cplx ratio = a(i, pivot) / b(j, pivot);
      if (std::abs(std::abs(ratio) - 1.0) > tol) continue;
      double worst = 0.0;
      for (std::size_t k = 0; k < b.cols(); ++k)
        worst = std::max(worst, std::abs(a(i, k) - ratio * b(j, k)));
      if (worst > tol) continue;
      used[j] = true;
      cert.permutation[i] = j;
      cert.phases[i] = ratio;
      matched = true;
    }
    if (!matched) return std::nullopt;
  }
  return cert;
}

Theorem2Report theorem2_check(const ComplexMatrix& t_hat, const ComplexMatrix& c, double tol) {
  const std::size_t n = t_hat.rows();
  if (!t_hat.is_square() || !c.is_square() || c.rows() != n || n == 0)
    throw Error(Errc::precondition_violated, "T and C must be square of equal size");
  const double s = std::sqrt(static_cast<double>(n));
  const ComplexMatrix t = scaled(t_hat, 1.0 / s);
  if (!is_complex_hadamard(t, tol))
    throw Error(Errc::precondition_violated, "T is not a complex Hadamard matrix");
  if (!is_unitary(c, tol)) throw Error(Errc::precondition_violated, "C is not unitary");
  for (std::size_t f = 0; f < n; ++f)
    if (std::abs(c(0, f)) <= tol)
      throw Error(Errc::precondition_violated,
                  "first row of C has a zero entry at column " + std::to_string(f));

  Theorem2Report report;
  report.exchange = verify_exchange(TCPair{t, c, std::nullopt}, tol);
  if (!report.exchange.ok()) {
    report.failure = "C Z_l C^dagger is not a complex permutation for l=" +
                     std::to_string(report.exchange.failure->l);
    return report;
  }

  ComplexMatrix z_rows(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t f = 0; f < n; ++f) z_rows(l, f) = std::conj(t_hat(l, f));
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n, kNoRow));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto prod = entrywise(row_span(z_rows, a), row_span(z_rows, b));
      for (std::size_t k = 0; k < n && mult[a][b] == kNoRow; ++k)
        if (equal_up_to_global_phase(prod, row_span(z_rows, k), tol)) mult[a][b] = k;
      if (mult[a][b] == kNoRow) {
        report.failure = "Z_" + std::to_string(a) + " Z_" + std::to_string(b) +
                         " is not proportional to any Z_l";
        return report;
      }
    }
  try {
    report.z_group = FiniteGroupTable::from_table(std::move(mult));
  } catch (const Error& e) {
    report.failure = std::string("Z_l do not form a group: ") + e.what();
    return report;
  }

  report.d.resize(n);
  for (std::size_t f = 0; f < n; ++f) report.d[f] = unit_phase(c(0, f) / t(0, f));
  const ComplexMatrix td = t * ComplexMatrix::diagonal(report.d);
  report.p = match_rows(c, td, tol);
  if (!report.p) {
    report.failure = "C is not a complex row permutation of T D";
    return report;
  }
  report.decomposition_residual = max_abs_diff(c, report.p->to_matrix() * td);
  if (report.decomposition_residual > tol)
    report.failure = "C = P T D residual " + std::to_string(report.decomposition_residual);
  return report;
}

}  // namespace fastlocc
