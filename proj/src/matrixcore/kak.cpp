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

#include "fastlocc/kak.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/predicates.hpp"

namespace fastlocc {

namespace {

constexpr double kPi = std::numbers::pi;

// Bell basis with phases chosen so SU(2) x SU(2) maps to SO(4).
ComplexMatrix magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  return {{s, 0.0, 0.0, s * i},
          {0.0, s * i, s, 0.0},
          {0.0, s * i, -s, 0.0},
          {s, 0.0, 0.0, -s * i}};
}

double fold(double x) {
  double r = std::fmod(x, kPi / 2.0);
  if (r < 0.0) r += kPi / 2.0;
  return std::min(r, kPi / 2.0 - r);
}

}  // namespace

KakInvariants kak_invariants(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw Error(Errc::invalid_input, "kak_invariants needs a 4x4 matrix");
  }
  if (!is_unitary(u, 1e-8)) throw Error(Errc::invalid_input, "kak_invariants: not unitary");

  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = u(r, c);
  m /= std::pow(m.determinant(), 0.25);

  const ComplexMatrix q = magic_basis();
  Eigen::Matrix4cd qe;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) qe(r, c) = q(r, c);
  const Eigen::Matrix4cd ub = qe.adjoint() * m * qe;
  const Eigen::Matrix4cd gram = ub.transpose() * ub;

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(gram, false);
  const auto& ev = solver.eigenvalues();
  // Eigenphases are 2*lambda_k for lambda = (a-b+c, -a+b+c, a+b-c, -a-b-c) in
  // some order; every order and branch choice lands in the same Weyl orbit.
  std::array<double, 3> half{};
  for (int k = 0; k < 3; ++k) half[k] = std::arg(ev(k)) / 2.0;
  std::array<double, 3> coords{fold((half[0] + half[2]) / 2.0),
                               fold((half[1] + half[2]) / 2.0),
                               fold((half[0] + half[1]) / 2.0)};
  std::sort(coords.begin(), coords.end(), std::greater<>());
  return {coords[0], coords[1], coords[2]};
}

ComplexMatrix kak_canonical_gate(double a, double b, double c) {
  const auto term = [](double angle, const ComplexMatrix& p) {
    const ComplexMatrix pp = tensor_product(p, p);
    return std::cos(angle) * ComplexMatrix::identity(4) + cplx(0.0, std::sin(angle)) * pp;
  };
  return term(a, pauli_x()) * term(b, pauli_y()) * term(c, pauli_z());
}

double kak_distance(const KakInvariants& x, const KakInvariants& y) {
  return std::max({std::abs(x.alpha - y.alpha), std::abs(x.beta - y.beta),
                   std::abs(x.gamma - y.gamma)});
}

}  // namespace fastlocc
