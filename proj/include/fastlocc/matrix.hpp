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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace fastlocc {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Dense complex matrix, row-major. Dimensions never exceed 4096 in practice;
/// the arithmetic below routes through the dispatched kernels.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws invalid_shape when entries.size() != rows*cols and invalid_input
  /// on non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix column(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<const cplx> row(std::size_t r) const {
    return std::span<const cplx>(data_).subspan(r * cols_, cols_);
  }
  std::vector<cplx> diagonal_entries() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// y = A x.
std::vector<cplx> apply(const ComplexMatrix& a, std::span<const cplx> x);

/// Kronecker product. Throws invalid_dimension if the product dimension
/// overflows.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

/// sum_i conj(x_i) y_i
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm(std::span<const cplx> x);

/// Haar-random unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Normalised pure state on a finite-dimensional space.
class StateVector {
 public:
  StateVector() = default;
  /// Throws invalid_input if the vector is empty or not normalised within tol.
  explicit StateVector(std::vector<cplx> amplitudes, double tol = 1e-9);

  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector random(std::size_t dim, std::mt19937_64& rng);
  /// Normalises v; throws invalid_input on a zero vector.
  static StateVector normalized(std::vector<cplx> v);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<cplx> amplitudes_;
};

}  // namespace fastlocc
