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

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "fastlocc/constructions.hpp"
#include "fastlocc/error.hpp"
#include "fastlocc/gates.hpp"
#include "fastlocc/predicates.hpp"

namespace fastlocc {
namespace {

struct Hit {
  std::uint64_t index;
  std::vector<std::size_t> k;
  std::vector<cplx> c;
};

struct Grid {
  std::size_t n = 0;
  std::size_t base = 0;  // N^2
  std::vector<std::size_t> others;  // non-identity elements, in index order
  std::vector<cplx> roots;          // exp(2 pi i k / N^2) / sqrt(N)
  // C(g, f) = lam(g, f) * c[h(g, f)]
  std::vector<std::size_t> h;
  std::vector<cplx> lam;
};

std::vector<Hit> scan(const Grid& grid, const SearchProblem& problem, std::uint64_t begin,
                      std::uint64_t end, double tol) {
  const std::size_t n = grid.n;
  std::vector<Hit> hits;
  std::vector<std::size_t> k(n, 0);
  std::vector<cplx> c(n);
  std::vector<cplx> cm(n * n);
  const std::size_t e = problem.group.identity();
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = grid.others.size(); i-- > 0;) {
      k[grid.others[i]] = static_cast<std::size_t>(rem % grid.base);
      rem /= grid.base;
    }
    k[e] = 0;
    for (std::size_t f = 0; f < n; ++f) c[f] = grid.roots[k[f]];
    for (std::size_t x = 0; x < n * n; ++x) cm[x] = grid.lam[x] * c[grid.h[x]];
    bool unitary = true;
    for (std::size_t g = 0; g < n && unitary; ++g)
      for (std::size_t g2 = g + 1; g2 < n && unitary; ++g2) {
        cplx ip = 0.0;
        for (std::size_t f = 0; f < n; ++f) ip += cm[g * n + f] * std::conj(cm[g2 * n + f]);
        unitary = std::abs(ip) <= tol;
      }
    if (!unitary) continue;
    const FastConditionReport report = check_fast_conditions(problem.group, problem.factor, c, tol);
    if (report.passed()) hits.push_back({idx, k, c});
  }
  return hits;
}

}  // namespace

SearchResult theorem3_search(const SearchProblem& problem, const SearchLimits& limits,
                             double tol) {
  const std::size_t n = problem.group.order();
  if (n > 4 && !limits.allow_large)
    throw Error(Errc::precondition_violated,
                "search over N=" + std::to_string(n) + " needs an explicit budget override");
  if (!is_normalized_factor_system(problem.factor, n, tol))
    throw Error(Errc::precondition_violated, "factor system is not normalized");

  Grid grid;
  grid.n = n;
  grid.base = n * n;
  for (std::size_t f = 0; f < n; ++f)
    if (f != problem.group.identity()) grid.others.push_back(f);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < grid.base; ++k)
    grid.roots.push_back(s * unit_root(static_cast<std::int64_t>(k),
                                       static_cast<std::int64_t>(grid.base)));
  grid.h.resize(n * n);
  grid.lam.resize(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t h = problem.group.mul(problem.group.inverse(g), f);
      grid.h[g * n + f] = h;
      grid.lam[g * n + f] = problem.factor(g, h);
    }

  SearchResult result;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < grid.others.size(); ++i)
    total = total > kMax / grid.base ? kMax : total * grid.base;
  result.candidates = total;
  result.evaluated = std::min(total, limits.budget);
  result.truncated = total > limits.budget;

  unsigned workers = limits.workers ? limits.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, 64));
  if (result.evaluated < 4096) workers = 1;
  const std::uint64_t chunk = (result.evaluated + workers - 1) / workers;
  std::vector<std::future<std::vector<Hit>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(result.evaluated, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(result.evaluated, begin + chunk);
    jobs.push_back(std::async(std::launch::async, scan, std::cref(grid), std::cref(problem),
                              begin, end, tol));
  }
  std::vector<Hit> hits;
  for (auto& job : jobs) {
    auto part = job.get();
    hits.insert(hits.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.index < b.index; });

  const std::size_t da = problem.u.front().rows();
  const std::size_t db = problem.v.front().rows();
  for (auto& hit : hits) {
    SearchSurvivor sv;
    sv.k = std::move(hit.k);
    sv.c = std::move(hit.c);
    sv.unitary = ComplexMatrix(da * db, da * db);
    for (std::size_t f = 0; f < n; ++f)
      sv.unitary += sv.c[f] * tensor_product(problem.u[f], problem.v[f]);
    if (sv.unitary.rows() == 4 && da == 2) sv.kak = kak_invariants(sv.unitary);
    sv.product = operator_schmidt_rank(sv.unitary, da, db, 1e-9) == 1;
    result.survivors.push_back(std::move(sv));
  }
  return result;
}

}  // namespace fastlocc
