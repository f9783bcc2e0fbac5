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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/protocols.hpp"

namespace fastlocc {
namespace {

bool is_diagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && std::abs(m(r, c)) > tol) return false;
  return true;
}

[[noreturn]] void bad_spec(const std::string& what) { throw Error(Errc::invalid_spec, what); }

}  // namespace

std::size_t ControlledUnitarySpec::d_a() const {
  return projectors.empty() ? subset.size() : projectors.front().rows();
}

std::size_t ControlledUnitarySpec::d_b() const { return v.empty() ? 0 : v.front().rows(); }

ComplexMatrix ControlledUnitarySpec::projector(std::size_t i) const {
  if (!projectors.empty()) return projectors.at(i);
  ComplexMatrix p(subset.size(), subset.size());
  p(i, i) = 1.0;
  return p;
}

void validate_controlled_spec(const ControlledUnitarySpec& spec, double tol) {
  const std::size_t n = spec.group.order();
  if (n == 0) bad_spec("group is empty");
  if (spec.v.size() != n)
    bad_spec("need V_k for all " + std::to_string(n) + " group elements, got " +
             std::to_string(spec.v.size()));
  const std::size_t db = spec.d_b();
  if (db == 0) bad_spec("V_k must be non-empty");
  for (std::size_t k = 0; k < n; ++k) {
    if (!spec.v[k].is_square() || spec.v[k].rows() != db)
      bad_spec("V_" + std::to_string(k) + " has the wrong shape");
    if (!is_unitary(spec.v[k], tol)) bad_spec("V_" + std::to_string(k) + " is not unitary");
  }
  if (max_abs_diff(spec.v[0], ComplexMatrix::identity(db)) > tol)
    bad_spec("V of the identity element is not I");
  // An abelian representation is fixed by its generators: they commute, have
  // the right orders, and every V_k is the matching product.
  const auto& cycles = spec.group.cycles();
  std::vector<std::size_t> gens(cycles.size());
  for (std::size_t s = 0; s < cycles.size(); ++s) {
    std::vector<std::size_t> t(cycles.size(), 0);
    t[s] = cycles[s] > 1 ? 1 : 0;
    gens[s] = spec.group.index(t);
  }
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t t = s + 1; t < gens.size(); ++t)
      if (max_abs_diff(spec.v[gens[s]] * spec.v[gens[t]], spec.v[gens[t]] * spec.v[gens[s]]) > tol)
        bad_spec("generator matrices do not commute");
  for (std::size_t k = 1; k < n; ++k) {
    const auto t = spec.group.tuple(k);
    std::size_t s = t.size();
    while (t[s - 1] == 0) --s;
    const std::size_t prev = spec.group.subtract(k, gens[s - 1]);
    if (max_abs_diff(spec.v[prev] * spec.v[gens[s - 1]], spec.v[k]) > tol)
      bad_spec("V_" + std::to_string(k) + " is not V_" + std::to_string(prev) + " V_" +
               std::to_string(gens[s - 1]));
    if (t[s - 1] == cycles[s - 1] - 1 && max_abs_diff(spec.v[k] * spec.v[gens[s - 1]],
                                                      spec.v[spec.group.add(k, gens[s - 1])]) > tol)
      bad_spec("generator " + std::to_string(gens[s - 1]) + " has the wrong order");
  }

  if (spec.subset.empty()) bad_spec("control subset is empty");
  std::set<std::size_t> seen;
  for (std::size_t k : spec.subset) {
    if (k >= n) bad_spec("subset element " + std::to_string(k) + " out of range");
    if (!seen.insert(k).second) bad_spec("subset element " + std::to_string(k) + " repeated");
  }

  if (spec.projectors.empty()) return;
  if (spec.projectors.size() != spec.subset.size())
    bad_spec("need one projector per subset element");
  const std::size_t da = spec.d_a();
  ComplexMatrix sum(da, da);
  for (std::size_t i = 0; i < spec.projectors.size(); ++i) {
    const ComplexMatrix& p = spec.projectors[i];
    if (!p.is_square() || p.rows() != da) bad_spec("projectors must share one square shape");
    if (max_abs_diff(p, p.adjoint()) > tol || max_abs_diff(p * p, p) > tol)
      bad_spec("P_" + std::to_string(i) + " is not an orthogonal projector");
    if (p.trace().real() < 0.5) bad_spec("P_" + std::to_string(i) + " has rank 0");
    for (std::size_t j = i + 1; j < spec.projectors.size(); ++j)
      if (max_abs(p * spec.projectors[j]) > tol)
        bad_spec("P_" + std::to_string(i) + " and P_" + std::to_string(j) +
                 " are not orthogonal");
    sum += p;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(da)) > tol)
    bad_spec("projectors do not sum to the identity");
}

SimultaneousDiagonalization diagonalize_commuting(std::span<const ComplexMatrix> ops,
                                                  double tol) {
  SimultaneousDiagonalization out;
  if (ops.empty()) throw Error(Errc::invalid_input, "no matrices to diagonalize");
  const std::size_t d = ops.front().rows();
  const bool already = std::all_of(ops.begin(), ops.end(),
                                   [tol](const ComplexMatrix& m) { return is_diagonal(m, tol); });
  if (already) {
    out.w = ComplexMatrix::identity(d);
    for (const auto& m : ops) out.diagonals.push_back(m.diagonal_entries());
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
    for (const auto& m : ops) {
      const double a = normal(rng);
      const double b = normal(rng);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          const cplx x = m(r, c);
          const cplx xt = std::conj(m(c, r));
          h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
              a * (x + xt) + b * cplx(0.0, 1.0) * (x - xt);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const Eigen::MatrixXcd& vecs = solver.eigenvectors();
    ComplexMatrix w(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        w(r, c) = vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    const ComplexMatrix wd = w.adjoint();
    std::vector<std::vector<cplx>> diags;
    bool ok = true;
    for (const auto& m : ops) {
      const ComplexMatrix dm = wd * m * w;
      if (!is_diagonal(dm, tol)) {
        ok = false;
        break;
      }
      diags.push_back(dm.diagonal_entries());
    }
    if (ok) {
      out.w = std::move(w);
      out.diagonals = std::move(diags);
      return out;
    }
  }
  throw Error(Errc::invalid_representation, "matrices have no common eigenbasis");
}

ControlledUnitarySpec make_controlled_spec(AbelianCycleStructure group,
                                           std::vector<std::size_t> subset,
                                           std::vector<ComplexMatrix> v,
                                           std::vector<ComplexMatrix> projectors, double tol) {
  const std::size_t n = group.order();
  ControlledUnitarySpec spec{std::move(group), std::move(subset), {}, std::move(projectors)};
  if (v.size() == n) {
    spec.v = std::move(v);
  } else if (v.size() == spec.subset.size() && !v.empty()) {
    for (std::size_t k : spec.subset)
      if (k >= n) bad_spec("subset element " + std::to_string(k) + " out of range");
    const auto diag = diagonalize_commuting(v, tol);
    const std::size_t db = diag.w.rows();
    std::vector<std::size_t> labels(db);
    for (std::size_t b = 0; b < db; ++b) {
      std::vector<cplx> values(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) values[i] = diag.diagonals[i][b];
      const auto q = match_irrep(spec.group, spec.subset, values, tol);
      if (!q)
        throw Error(Errc::invalid_representation,
                    "eigenvalue sequence " + std::to_string(b) + " matches no irrep");
      labels[b] = *q;
    }
    const ComplexMatrix wd = diag.w.adjoint();
    const auto nn = static_cast<std::int64_t>(n);
    spec.v.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<cplx> d(db);
      for (std::size_t b = 0; b < db; ++b)
        d[b] = unit_root(static_cast<std::int64_t>(spec.group.pairing_exponent(labels[b], k)), nn);
      spec.v[k] = diag.w * ComplexMatrix::diagonal(d) * wd;
    }
    for (std::size_t i = 0; i < spec.subset.size(); ++i) spec.v[spec.subset[i]] = v[i];
  } else {
    bad_spec("need V_k for every group element or for every subset element");
  }
  validate_controlled_spec(spec, tol);
  return spec;
}

ComplexMatrix DoubleGroupSpec::gamma(std::size_t f) const { return tensor_product(u[f], v[f]); }

void validate_double_spec(const DoubleGroupSpec& spec, double tol) {
  const std::size_t n = spec.group.order();
  if (n == 0) bad_spec("group is empty");
  if (spec.u.size() != n || spec.v.size() != n || spec.c.size() != n)
    bad_spec("need U(f), V(f) and c(f) for all " + std::to_string(n) + " elements");
  const std::size_t da = spec.d_a();
  const std::size_t db = spec.d_b();
  for (std::size_t f = 0; f < n; ++f)
    if (!spec.u[f].is_square() || spec.u[f].rows() != da || !spec.v[f].is_square() ||
        spec.v[f].rows() != db || da == 0 || db == 0)
      bad_spec("U(" + std::to_string(f) + ") or V(" + std::to_string(f) + ") has the wrong shape");
  std::vector<ComplexMatrix> gammas;
  gammas.reserve(n);
  for (std::size_t f = 0; f < n; ++f) gammas.push_back(spec.gamma(f));
  FactorSystem derived;
  try {
    derived = factor_system_from_rep(gammas, spec.group, tol);
  } catch (const Error& e) {
    bad_spec(std::string("U(f) (x) V(f) is not a projective representation: ") + e.what());
  }
  if (spec.factor.order() != n ||
      max_abs_diff(derived.values(), spec.factor.values()) > tol)
    bad_spec("stored factor system does not match the representation");
  if (spec.tc.t.rows() != n || spec.tc.c.rows() != n || !spec.tc.t.is_square() ||
      !spec.tc.c.is_square())
    bad_spec("T and C must be " + std::to_string(n) + "x" + std::to_string(n));
}

ComplexMatrix target_unitary(const ControlledUnitarySpec& spec, double tol) {
  const std::size_t da = spec.d_a();
  const std::size_t db = spec.d_b();
  ComplexMatrix u(da * db, da * db);
  for (std::size_t i = 0; i < spec.subset.size(); ++i)
    u += tensor_product(spec.projector(i), spec.v.at(spec.subset[i]));
  if (!is_unitary(u, tol)) bad_spec("controlled sum is not unitary");
  return u;
}

ComplexMatrix target_unitary(const DoubleGroupSpec& spec, double tol) {
  const std::size_t d = spec.d_a() * spec.d_b();
  ComplexMatrix u(d, d);
  for (std::size_t f = 0; f < spec.order(); ++f) u += spec.c[f] * spec.gamma(f);
  if (!is_unitary(u, tol)) bad_spec("sum_f c(f) Gamma(f) is not unitary");
  return u;
}

std::vector<cplx> resource_state(std::size_t n, std::span<const cplx> d) {
  if (n == 0) throw Error(Errc::invalid_dimension, "resource dimension must be positive");
  if (!d.empty() && d.size() != n) throw Error(Errc::invalid_input, "D must have N entries");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> phi(n * n);
  for (std::size_t j = 0; j < n; ++j) phi[j * n + j] = s * (d.empty() ? cplx(1.0) : d[j]);
  return phi;
}

double entanglement_cost(const ControlledUnitarySpec& spec) {
  return std::log2(static_cast<double>(spec.order()));
}

double entanglement_cost(const DoubleGroupSpec& spec) {
  return std::log2(static_cast<double>(spec.order()));
}

}  // namespace fastlocc
