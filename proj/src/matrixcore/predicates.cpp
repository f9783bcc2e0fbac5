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

#include "fastlocc/predicates.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "fastlocc/error.hpp"

namespace fastlocc {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(Errc::invalid_shape, std::string(op) + ": matrix is " +
                                         std::to_string(m.rows()) + "x" +
                                         std::to_string(m.cols()));
  }
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

PermutationCertificate PermutationCertificate::identity(std::size_t n) {
  PermutationCertificate cert;
  cert.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) cert.permutation[i] = i;
  cert.phases.assign(n, 1.0);
  return cert;
}

ComplexMatrix PermutationCertificate::to_matrix() const {
  ComplexMatrix m(size(), size());
  for (std::size_t r = 0; r < size(); ++r) m(r, permutation[r]) = phases[r];
  return m;
}

std::size_t PermutationCertificate::row_of_column(std::size_t col) const {
  const auto it = std::find(permutation.begin(), permutation.end(), col);
  if (it == permutation.end()) {
    throw Error(Errc::invalid_state, "column " + std::to_string(col) + " not in certificate");
  }
  return static_cast<std::size_t>(it - permutation.begin());
}

PermutationCertificate PermutationCertificate::then(const PermutationCertificate& rhs) const {
  if (rhs.size() != size()) throw Error(Errc::invalid_shape, "certificate size mismatch");
  // (A B)(r, c): A has (r, pa[r]) and B has (pa[r], pb[pa[r]]).
  PermutationCertificate out;
  out.permutation.resize(size());
  out.phases.resize(size());
  for (std::size_t r = 0; r < size(); ++r) {
    const std::size_t mid = permutation[r];
    out.permutation[r] = rhs.permutation[mid];
    out.phases[r] = phases[r] * rhs.phases[mid];
  }
  return out;
}

bool PermutationCertificate::is_identity(double tol) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (permutation[i] != i || std::abs(phases[i] - 1.0) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  require_square(m, "is_unitary");
  const ComplexMatrix gram = m.adjoint() * m;
  return max_abs_diff(gram, ComplexMatrix::identity(m.rows())) <= tol;
}

bool is_complex_hadamard(const ComplexMatrix& m, double tol) {
  require_square(m, "is_complex_hadamard");
  if (m.rows() == 0) return false;
  const double expected = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  for (const cplx& z : m.data())
    if (std::abs(std::abs(z) - expected) > tol) return false;
  return is_unitary(m, tol);
}

std::optional<PermutationCertificate> is_complex_permutation(const ComplexMatrix& m,
                                                             double tol) {
  require_square(m, "is_complex_permutation");
  const std::size_t n = m.rows();
  PermutationCertificate cert;
  cert.permutation.assign(n, n);
  cert.phases.assign(n, 0.0);
  std::vector<bool> column_used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double mag = std::abs(m(r, c));
      if (mag < tol) continue;
      if (std::abs(mag - 1.0) > tol) return std::nullopt;
      if (cert.permutation[r] != n || column_used[c]) return std::nullopt;
      cert.permutation[r] = c;
      cert.phases[r] = m(r, c);
      column_used[c] = true;
    }
    if (cert.permutation[r] == n) return std::nullopt;
  }
  return cert;
}

std::optional<double> equal_up_to_global_phase(std::span<const cplx> a,
                                               std::span<const cplx> b, double tol) {
  if (a.size() != b.size()) throw Error(Errc::invalid_shape, "global phase: length mismatch");
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double mag = std::abs(b[i]);
    if (mag > best) {
      best = mag;
      ref = i;
    }
  }
  if (b.empty() || best <= tol) {
    // b is numerically zero; only a zero a matches, and any phase will do.
    for (const cplx& z : a)
      if (std::abs(z) > tol) return std::nullopt;
    return 0.0;
  }
  const double theta = std::arg(a[ref] / b[ref]);
  const cplx phase = std::polar(1.0, theta);
  double residual = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    residual = std::max(residual, std::abs(a[i] - phase * b[i]));
  if (residual > tol) return std::nullopt;
  return theta;
}

std::optional<double> equal_up_to_global_phase(const ComplexMatrix& a,
                                               const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::invalid_shape, "global phase: shape mismatch");
  return equal_up_to_global_phase(a.data(), b.data(), tol);
}

ComplexMatrix reshuffle(const ComplexMatrix& u, std::size_t da, std::size_t db) {
  if (!u.is_square() || u.rows() != da * db) {
    throw Error(Errc::invalid_shape, "reshuffle: expected " + std::to_string(da * db) +
                                         "x" + std::to_string(da * db) + " operator");
  }
  ComplexMatrix r(da * da, db * db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t ap = 0; ap < da; ++ap)
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t bp = 0; bp < db; ++bp)
          r(a * da + ap, b * db + bp) = u(a * db + b, ap * db + bp);
  return r;
}

std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& u, std::size_t da,
                                                  std::size_t db) {
  const Eigen::MatrixXcd r = to_eigen(reshuffle(u, da, db));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  const Eigen::VectorXd& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

std::size_t operator_schmidt_rank(const ComplexMatrix& u, std::size_t da, std::size_t db,
                                  double tol) {
  const auto sv = operator_schmidt_coefficients(u, da, db);
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [tol](double s) { return s > tol; }));
}

std::size_t state_schmidt_rank(std::span<const cplx> psi, std::size_t da, std::size_t db,
                               double tol) {
  if (psi.size() != da * db) throw Error(Errc::invalid_shape, "state_schmidt_rank: size");
  Eigen::MatrixXcd m(da, db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) m(a, b) = psi[a * db + b];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  return static_cast<std::size_t>((s.array() > tol).count());
}

}  // namespace fastlocc
