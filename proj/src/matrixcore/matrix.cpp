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

#include "fastlocc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fastlocc/error.hpp"
#include "fastlocc/kernels.hpp"

namespace fastlocc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::invalid_shape: return "invalid-shape";
    case Errc::invalid_input: return "invalid-input";
    case Errc::not_a_projective_representation: return "not-a-projective-representation";
    case Errc::invalid_character_table: return "invalid-character-table";
    case Errc::condition_violated: return "condition-violated";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::protocol_violation: return "protocol-violation";
    case Errc::invalid_state: return "invalid-state";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::invalid_representation: return "invalid-representation";
    case Errc::invalid_dims: return "invalid-dims";
    case Errc::unknown_fixture: return "unknown-fixture";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

namespace {

bool all_finite(std::span<const cplx> v) {
  return std::all_of(v.begin(), v.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::invalid_shape,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::invalid_shape,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(data_.size()));
  }
  if (!all_finite(data_)) throw Error(Errc::invalid_input, "non-finite matrix entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::invalid_shape, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite(data_)) throw Error(Errc::invalid_input, "non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
  return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

std::vector<cplx> ComplexMatrix::diagonal_entries() const {
  std::vector<cplx> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw Error(Errc::invalid_shape, "trace of non-square matrix");
  cplx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  kernels::active().axpy(1.0, other.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  kernels::active().axpy(-1.0, other.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::invalid_shape,
                "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  if (c.size() == 0) return c;
  kernels::active().gemm(a.data().data(), b.data().data(), c.data().data(),
                         a.rows(), a.cols(), b.cols());
  return c;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

std::vector<cplx> apply(const ComplexMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) {
    throw Error(Errc::invalid_shape, "apply: matrix has " + std::to_string(a.cols()) +
                                         " columns, vector has " +
                                         std::to_string(x.size()) + " entries");
  }
  std::vector<cplx> y(a.rows());
  kernels::active().gemv(a.data().data(), x.data(), y.data(), a.rows(), a.cols());
  return y;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const auto checked_mul = [](std::size_t x, std::size_t y) {
    if (x != 0 && y > kMax / x) throw Error(Errc::invalid_dimension, "tensor product overflow");
    return x * y;
  };
  const std::size_t rows = checked_mul(a.rows(), b.rows());
  const std::size_t cols = checked_mul(a.cols(), b.cols());
  checked_mul(rows, cols);
  ComplexMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

double max_abs(const ComplexMatrix& a) {
  double best = 0.0;
  for (const cplx& z : a.data()) best = std::max(best, std::abs(z));
  return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs_diff(a.data(), b.data());
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw Error(Errc::invalid_shape, "max_abs_diff: length mismatch");
  return kernels::active().max_abs_diff(a.data(), b.data(), a.size());
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw Error(Errc::invalid_shape, "inner: length mismatch");
  return kernels::active().dotc(x.data(), y.data(), x.size());
}

double norm(std::span<const cplx> x) { return std::sqrt(inner(x, x).real()); }

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Columns are orthonormalised in place; stored column-major in `cols`.
  std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
  for (auto& c : cols)
    for (auto& z : c) z = {gauss(rng), gauss(rng)};
  for (std::size_t j = 0; j < n; ++j) {
    // Two passes of modified Gram-Schmidt keep orthogonality at 1e-15.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < j; ++p) {
        const cplx proj = inner(cols[p], cols[j]);
        kernels::active().axpy(-proj, cols[p].data(), cols[j].data(), n);
      }
    const double nrm = norm(cols[j]);
    for (auto& z : cols[j]) z /= nrm;
  }
  ComplexMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

StateVector::StateVector(std::vector<cplx> amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw Error(Errc::invalid_input, "empty state vector");
  if (!all_finite(amplitudes_)) throw Error(Errc::invalid_input, "non-finite amplitude");
  const double n2 = inner(amplitudes_, amplitudes_).real();
  if (std::abs(n2 - 1.0) > tol) {
    throw Error(Errc::invalid_input,
                "state vector not normalised (|psi|^2 = " + std::to_string(n2) + ")");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(Errc::invalid_input, "basis index out of range");
  std::vector<cplx> v(dim);
  v[index] = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::random(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(dim);
  for (auto& z : v) z = {gauss(rng), gauss(rng)};
  return normalized(std::move(v));
}

StateVector StateVector::normalized(std::vector<cplx> v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw Error(Errc::invalid_input, "cannot normalise a zero vector");
  for (auto& z : v) z /= n;
  return StateVector(std::move(v));
}

}  // namespace fastlocc
