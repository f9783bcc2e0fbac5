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
#include <numeric>
#include <set>
#include <string>

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"

namespace fastlocc {
namespace {

constexpr double kAlphaCounterexample = 0.3;

using Params = FixtureParams;

long long param(const Params& params, const std::string& key, long long fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void allow_only(const std::string& name, const Params& params, std::set<std::string> keys) {
  for (const auto& [key, value] : params)
    if (!keys.count(key))
      throw Error(Errc::invalid_input, "fixture " + name + " takes no parameter '" + key + "'");
}

std::size_t positive(const std::string& name, long long value, long long lo, long long hi) {
  if (value < lo || value > hi)
    throw Error(Errc::invalid_input, name + " must lie in [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "], got " + std::to_string(value));
  return static_cast<std::size_t>(value);
}

ComplexMatrix xz() { return pauli_x() * pauli_z(); }

// I(x)I, X(x)X, Z(x)Z, XZ(x)XZ split into its A and B halves.
std::vector<ComplexMatrix> klein_ops() {
  return {ComplexMatrix::identity(2), pauli_x(), pauli_z(), xz()};
}

ExampleFixture klein_double(const std::string& name, std::vector<cplx> c) {
  const auto ops = klein_ops();
  return {name, GroupDescriptor::abelian({2, 2}),
          make_double_spec(abelian_group({2, 2}).table, ops, ops, std::move(c))};
}

ExampleFixture controlled(const std::string& name, std::vector<std::size_t> cycles,
                          std::vector<std::size_t> subset, std::vector<ComplexMatrix> v) {
  AbelianCycleStructure group(cycles);
  return {name, GroupDescriptor::abelian(std::move(cycles)),
          make_controlled_spec(std::move(group), std::move(subset), std::move(v))};
}

std::vector<std::size_t> all_elements(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

ComplexMatrix diag4(int a, int b, int c, int d) {
  return ComplexMatrix::diagonal(std::vector<cplx>{double(a), double(b), double(c), double(d)});
}

ComplexMatrix top_left(const ComplexMatrix& m, std::size_t k) {
  ComplexMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

std::vector<cplx> cyclic_coeffs(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_input, "N must be >= 1");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  const auto two_n = static_cast<std::int64_t>(2 * n);
  std::vector<cplx> c(n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto ff = static_cast<std::int64_t>(f);
    const std::int64_t e = n % 2 == 0 ? -ff * ff : -ff * (ff + 1);
    c[f] = s * unit_root(e, two_n);
  }
  return c;
}

std::vector<cplx> dihedral_coeffs(std::size_t n, std::size_t m) {
  if (n < 2) throw Error(Errc::invalid_input, "n must be >= 2");
  if (m < 1 || std::gcd(m, n) != 1)
    throw Error(Errc::invalid_input, "m=" + std::to_string(m) + " is not coprime with n=" +
                                         std::to_string(n));
  const double s = 1.0 / std::sqrt(static_cast<double>(2 * n));
  const auto two_n = static_cast<std::int64_t>(2 * n);
  const auto mm = static_cast<std::int64_t>(m);
  std::vector<cplx> c(2 * n);
  for (std::size_t f = 0; f < 2 * n; ++f) {
    const auto ff = static_cast<std::int64_t>(f);
    const std::int64_t e = n % 2 == 0 ? mm * ff * ff : mm * ff * (ff + 1);
    const cplx eps = f < n ? cplx(1.0) : cplx(0.0, 1.0);
    c[f] = s * eps * unit_root(e % two_n, two_n);
  }
  return c;
}

std::vector<std::string> example_names() {
  return {"ex1i", "ex1ii", "ex2i", "ex2ii", "ex3",         "ex4",     "ex5a",
          "ex5b", "ex5c",  "ex6",  "ex7",   "ex8",         "cz",      "counterexample",
          "uniform", "rep-c2-zz", "rep-c2-trivial", "rep-klein"};
}

ExampleFixture example_fixture(const std::string& name, const FixtureParams& params) {
  const cplx i(0.0, 1.0);
  const cplx zeta = unit_root(1, 8);
  const double half = 0.5;

  if (name == "ex1i") {
    allow_only(name, params, {"N"});
    const std::size_t n = positive("N", param(params, "N", 2), 2, 64);
    std::vector<ComplexMatrix> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(shift_gate(n, static_cast<std::int64_t>(k)));
    return controlled(name, {n}, all_elements(n), std::move(v));
  }
  if (name == "ex1ii") {
    allow_only(name, params, {});
    std::vector<ComplexMatrix> v;
    for (std::int64_t k = 0; k < 3; ++k)
      v.push_back(ComplexMatrix::diagonal(std::vector<cplx>{1.0, unit_root(k, 3)}));
    return controlled(name, {3}, all_elements(3), std::move(v));
  }
  if (name == "ex2i" || name == "ex2ii") {
    allow_only(name, params, {});
    std::vector<ComplexMatrix> v{diag4(1, 1, 1, 1), diag4(1, 1, -1, -1), diag4(1, -1, 1, -1),
                                 diag4(1, -1, -1, 1)};
    if (name == "ex2ii")
      for (auto& m : v) m = top_left(m, 3);
    return controlled(name, {2, 2}, all_elements(4), std::move(v));
  }
  if (name == "ex3") {
    allow_only(name, params, {"N", "m"});
    const std::size_t n = positive("N", param(params, "N", 8), 2, 4096);
    const std::size_t m = positive("m", param(params, "m", 3), 1, static_cast<long long>(n) - 1);
    std::vector<ComplexMatrix> v;
    for (std::size_t k = 0; k < n; ++k)
      v.push_back(ComplexMatrix::diagonal(
          std::vector<cplx>{1.0, unit_root(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n))}));
    return controlled(name, {n}, {0, m}, std::move(v));
  }
  if (name == "cz") {
    allow_only(name, params, {});
    return controlled(name, {2}, {0, 1}, {ComplexMatrix::identity(2), pauli_z()});
  }
  if (name == "ex4") {
    allow_only(name, params, {});
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> u{ComplexMatrix::identity(2), pauli_z()};
    return {name, GroupDescriptor::abelian({2}),
            make_double_spec(abelian_group({2}).table, u, u, {s, s * i})};
  }
  if (name == "ex5a") {
    allow_only(name, params, {});
    return klein_double(name, {half, half, half, -half});
  }
  if (name == "ex5b") {
    allow_only(name, params, {});
    return klein_double(name, {half, half * i, half, -half * i});
  }
  if (name == "ex5c") {
    allow_only(name, params, {});
    return klein_double(name, {half, half, half * zeta, half * unit_root(5, 8)});
  }
  if (name == "counterexample") {
    allow_only(name, params, {});
    const cplx e = std::polar(1.0, kAlphaCounterexample);
    return klein_double(name, {half, half, half * e, -half * e});
  }
  if (name == "uniform") {
    allow_only(name, params, {});
    return klein_double(name, {half, half, half, half});
  }
  if (name == "ex6") {
    allow_only(name, params, {"N"});
    const std::size_t n = positive("N", param(params, "N", 3), 1, 32);
    std::vector<ComplexMatrix> u;
    for (std::size_t f = 0; f < n; ++f) u.push_back(phase_gate(n, -static_cast<std::int64_t>(f)));
    return {name, GroupDescriptor::abelian({n}),
            make_double_spec(abelian_group({n}).table, u, u, cyclic_coeffs(n))};
  }
  if (name == "ex7") {
    allow_only(name, params, {});
    const auto ops = klein_ops();
    std::vector<ComplexMatrix> u;
    for (std::size_t f = 0; f < 8; ++f) u.push_back(ops[f % 4]);
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    std::vector<cplx> c{s,
                        s,
                        s * zeta,
                        s * unit_root(5, 8),
                        s * unit_root(3, 8),
                        s * unit_root(7, 8),
                        s * unit_root(2, 8),
                        s * unit_root(2, 8)};
    return {name, GroupDescriptor::abelian({2, 2, 2}),
            make_double_spec(abelian_group({2, 2, 2}).table, u, u, std::move(c))};
  }
  if (name == "ex8") {
    allow_only(name, params, {"n", "m"});
    const std::size_t n = positive("n", param(params, "n", 3), 2, 64);
    const std::size_t m = positive("m", param(params, "m", 1), 1, 1 << 20);
    const auto u = dihedral_matrices(n);
    return {name, GroupDescriptor::dihedral(n),
            make_double_spec(dihedral_group(n), u, u, dihedral_coeffs(n, m))};
  }
  if (name == "rep-c2-zz" || name == "rep-c2-trivial") {
    allow_only(name, params, {});
    std::vector<ComplexMatrix> u{ComplexMatrix::identity(2),
                                 name == "rep-c2-zz" ? pauli_z() : ComplexMatrix::identity(2)};
    return {name, GroupDescriptor::abelian({2}), make_search_problem(abelian_group({2}).table, u, u)};
  }
  if (name == "rep-klein") {
    allow_only(name, params, {});
    const auto ops = klein_ops();
    return {name, GroupDescriptor::abelian({2, 2}),
            make_search_problem(abelian_group({2, 2}).table, ops, ops)};
  }
  throw Error(Errc::unknown_fixture, "unknown fixture '" + name + "'");
}

}  // namespace fastlocc
