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

#include "fastlocc/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/predicates.hpp"

namespace fastlocc {

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::vector<std::size_t>> mult) {
  const std::size_t n = mult.size();
  if (n == 0) throw Error(Errc::invalid_input, "group table is empty");
  for (const auto& row : mult) {
    if (row.size() != n) throw Error(Errc::invalid_input, "group table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t v : row) {
      if (v >= n || seen[v]) throw Error(Errc::invalid_input, "group table is not a Latin square");
      seen[v] = true;
    }
  }
  FiniteGroupTable g;
  g.mult_ = std::move(mult);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t f = 0; f < n && ok; ++f) ok = g.mult_[e][f] == f && g.mult_[f][e] == f;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::invalid_input, "group table has no identity");
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mult_[a][b] == g.identity_ && g.mult_[b][a] == g.identity_) g.inverse_[a] = b;
  if (std::find(g.inverse_.begin(), g.inverse_.end(), n) != g.inverse_.end())
    throw Error(Errc::invalid_input, "group table lacks two-sided inverses");
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (g.mult_[g.mult_[a][b]][c] != g.mult_[a][g.mult_[b][c]])
            throw Error(Errc::invalid_input, "group table is not associative at (" +
                                                 std::to_string(a) + "," + std::to_string(b) +
                                                 "," + std::to_string(c) + ")");
  }
  return g;
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mult_[a][b] != mult_[b][a]) return false;
  return true;
}

AbelianCycleStructure::AbelianCycleStructure(std::vector<std::size_t> cycles)
    : cycles_(std::move(cycles)), order_(1) {
  if (cycles_.empty()) throw Error(Errc::invalid_input, "cycle list is empty");
  for (std::size_t r : cycles_) {
    if (r == 0) throw Error(Errc::invalid_input, "cycle length must be >= 1");
    order_ *= r;
  }
}

std::vector<std::size_t> AbelianCycleStructure::tuple(std::size_t index) const {
  if (index >= order_) throw Error(Errc::invalid_input, "group index out of range");
  std::vector<std::size_t> t(cycles_.size());
  for (std::size_t s = cycles_.size(); s-- > 0;) {
    t[s] = index % cycles_[s];
    index /= cycles_[s];
  }
  return t;
}

std::size_t AbelianCycleStructure::index(std::span<const std::size_t> t) const {
  if (t.size() != cycles_.size()) throw Error(Errc::invalid_input, "tuple length mismatch");
  std::size_t idx = 0;
  for (std::size_t s = 0; s < cycles_.size(); ++s) {
    if (t[s] >= cycles_[s]) throw Error(Errc::invalid_input, "tuple component out of range");
    idx = idx * cycles_[s] + t[s];
  }
  return idx;
}

std::size_t AbelianCycleStructure::add(std::size_t a, std::size_t b) const {
  auto ta = tuple(a);
  const auto tb = tuple(b);
  for (std::size_t s = 0; s < ta.size(); ++s) ta[s] = (ta[s] + tb[s]) % cycles_[s];
  return index(ta);
}

std::size_t AbelianCycleStructure::negate(std::size_t a) const {
  auto ta = tuple(a);
  for (std::size_t s = 0; s < ta.size(); ++s) ta[s] = (cycles_[s] - ta[s]) % cycles_[s];
  return index(ta);
}

std::size_t AbelianCycleStructure::subtract(std::size_t a, std::size_t b) const {
  return add(a, negate(b));
}

std::size_t AbelianCycleStructure::pairing_exponent(std::size_t k, std::size_t m) const {
  const auto tk = tuple(k);
  const auto tm = tuple(m);
  std::size_t t = 0;
  for (std::size_t s = 0; s < tk.size(); ++s)
    t = (t + (tk[s] * tm[s] % cycles_[s]) * (order_ / cycles_[s])) % order_;
  return t;
}

FiniteGroupTable AbelianCycleStructure::table() const {
  std::vector<std::vector<std::size_t>> mult(order_, std::vector<std::size_t>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) mult[a][b] = add(a, b);
  return FiniteGroupTable::from_table(std::move(mult));
}

AbelianGroup abelian_group(std::vector<std::size_t> cycles) {
  AbelianCycleStructure structure(std::move(cycles));
  FiniteGroupTable table = structure.table();
  return {std::move(structure), std::move(table)};
}

FiniteGroupTable dihedral_group(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_input, "dihedral group needs n >= 2");
  const std::size_t order = 2 * n;
  // r_a r_b = r_{a+b}, r_a s_b = s_{a+b}, s_a r_b = s_{a-b}, s_a s_b = r_{a-b}
  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  for (std::size_t f = 0; f < order; ++f)
    for (std::size_t g = 0; g < order; ++g) {
      const bool fr = f >= n;
      const bool gr = g >= n;
      const std::size_t a = f % n;
      const std::size_t b = g % n;
      const std::size_t angle = fr ? (a + n - b) % n : (a + b) % n;
      mult[f][g] = (fr != gr) ? n + angle : angle;
    }
  return FiniteGroupTable::from_table(std::move(mult));
}

std::vector<ComplexMatrix> dihedral_matrices(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_input, "dihedral group needs n >= 2");
  std::vector<ComplexMatrix> out;
  out.reserve(2 * n);
  for (std::size_t f = 0; f < 2 * n; ++f) {
    const cplx w = unit_root(static_cast<std::int64_t>(f), static_cast<std::int64_t>(n));
    const double c = w.real();
    const double s = w.imag();
    if (f < n) {
      out.push_back({{c, -s}, {s, c}});
    } else {
      out.push_back({{-c, -s}, {-s, c}});
    }
  }
  return out;
}

GroupDescriptor GroupDescriptor::abelian(std::vector<std::size_t> cycles) {
  GroupDescriptor d;
  d.kind = Kind::abelian;
  d.cycles = std::move(cycles);
  return d;
}

GroupDescriptor GroupDescriptor::dihedral(std::size_t n) {
  GroupDescriptor d;
  d.kind = Kind::dihedral;
  d.n = n;
  return d;
}

GroupDescriptor GroupDescriptor::explicit_table(std::vector<std::vector<std::size_t>> table) {
  GroupDescriptor d;
  d.kind = Kind::table;
  d.table = std::move(table);
  return d;
}

FiniteGroupTable GroupDescriptor::build() const {
  switch (kind) {
    case Kind::abelian:
      return AbelianCycleStructure(cycles).table();
    case Kind::dihedral:
      return dihedral_group(n);
    case Kind::table:
      return FiniteGroupTable::from_table(table);
  }
  throw Error(Errc::invalid_input, "unknown group descriptor");
}

cplx weighted_pair_phase(const AbelianCycleStructure& cycles, std::span<const std::size_t> k,
                         std::span<const std::size_t> m) {
  const std::size_t ki = cycles.index(k);
  const std::size_t mi = cycles.index(m);
  return weighted_pair_phase(cycles, ki, mi);
}

cplx weighted_pair_phase(const AbelianCycleStructure& cycles, std::size_t k, std::size_t m) {
  const auto t = static_cast<std::int64_t>(cycles.pairing_exponent(k, m));
  return unit_root(-t, static_cast<std::int64_t>(cycles.order()));
}

ComplexMatrix character_table(const AbelianCycleStructure& cycles) {
  const std::size_t n = cycles.order();
  ComplexMatrix k(n, n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t f = 0; f < n; ++f)
      k(q, f) = unit_root(static_cast<std::int64_t>(cycles.pairing_exponent(q, f)),
                          static_cast<std::int64_t>(n));
  return k;
}

std::optional<std::size_t> match_irrep(const AbelianCycleStructure& cycles,
                                       std::span<const std::size_t> subset,
                                       std::span<const cplx> values, double tol) {
  if (subset.size() != values.size())
    throw Error(Errc::invalid_input, "subset and value lists differ in length");
  const auto n = static_cast<std::int64_t>(cycles.order());
  for (std::size_t q = 0; q < cycles.order(); ++q) {
    bool ok = true;
    for (std::size_t i = 0; i < subset.size() && ok; ++i) {
      const auto t = static_cast<std::int64_t>(cycles.pairing_exponent(q, subset[i]));
      ok = std::abs(values[i] - unit_root(t, n)) <= tol;
    }
    if (ok) return q;
  }
  return std::nullopt;
}

FactorSystem::FactorSystem(std::size_t order, std::vector<cplx> values)
    : order_(order), values_(std::move(values)) {
  if (values_.size() != order_ * order_)
    throw Error(Errc::invalid_input, "factor system must have N*N entries");
  for (const cplx& z : values_)
    if (std::abs(std::abs(z) - 1.0) > 1e-6)
      throw Error(Errc::invalid_input, "factor system entries must have unit modulus");
}

FactorSystem FactorSystem::trivial(std::size_t order) {
  return FactorSystem(order, std::vector<cplx>(order * order, 1.0));
}

bool FactorSystem::is_standard(std::size_t identity, double tol) const {
  for (std::size_t f = 0; f < order_; ++f)
    if (std::abs((*this)(identity, f) - 1.0) > tol || std::abs((*this)(f, identity) - 1.0) > tol)
      return false;
  return true;
}

double FactorSystem::cocycle_residual(const FiniteGroupTable& group) const {
  if (group.order() != order_) throw Error(Errc::invalid_input, "factor system order mismatch");
  double worst = 0.0;
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = 0; h < order_; ++h)
      for (std::size_t k = 0; k < order_; ++k) {
        const cplx lhs = (*this)(g, h) * (*this)(group.mul(g, h), k);
        const cplx rhs = (*this)(g, group.mul(h, k)) * (*this)(h, k);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

bool FactorSystem::is_trivial(double tol) const {
  return std::all_of(values_.begin(), values_.end(),
                     [tol](const cplx& z) { return std::abs(z - 1.0) <= tol; });
}

FactorSystem factor_system_from_rep(std::span<const ComplexMatrix> matrices,
                                    const FiniteGroupTable& group, double tol) {
  const std::size_t n = group.order();
  if (matrices.size() != n)
    throw Error(Errc::invalid_input, "need one matrix per group element (" + std::to_string(n) +
                                         "), got " + std::to_string(matrices.size()));
  const std::size_t d = matrices.front().rows();
  for (std::size_t f = 0; f < n; ++f) {
    if (!matrices[f].is_square() || matrices[f].rows() != d || d == 0)
      throw Error(Errc::invalid_input, "representation matrices must be square and equal-sized");
    if (!is_unitary(matrices[f], tol))
      throw Error(Errc::invalid_input, "representation matrix " + std::to_string(f) +
                                           " is not unitary");
  }
  std::vector<cplx> lambda(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const ComplexMatrix prod = matrices[g] * matrices[h];
      const ComplexMatrix& target = matrices[group.mul(g, h)];
      const cplx l = inner(target.data(), prod.data()) / static_cast<double>(d);
      const double residual = max_abs_diff(prod, l * target);
      if (residual > tol || std::abs(std::abs(l) - 1.0) > tol) {
        throw Error(Errc::not_a_projective_representation,
                    "Gamma(" + std::to_string(g) + ")Gamma(" + std::to_string(h) +
                        ") is not a phase times Gamma(gh); residual " + std::to_string(residual));
      }
      lambda[g * n + h] = l / std::abs(l);
    }
  return FactorSystem(n, std::move(lambda));
}

bool is_normalized_factor_system(const FactorSystem& factor, std::size_t n, double tol) {
  if (factor.order() == 0) return false;
  bool standard = false;
  for (std::size_t e = 0; e < factor.order() && !standard; ++e) standard = factor.is_standard(e, tol);
  if (!standard) return false;
  const auto exponent = static_cast<int>(n);
  for (const cplx& z : factor.values())
    if (std::abs(std::pow(z, exponent) - 1.0) > tol) return false;
  return true;
}

ProjectiveRep make_projective_rep(FiniteGroupTable group, std::vector<ComplexMatrix> matrices,
                                  double tol) {
  FactorSystem factor = factor_system_from_rep(matrices, group, tol);
  return {std::move(group), std::move(matrices), std::move(factor)};
}

}  // namespace fastlocc
