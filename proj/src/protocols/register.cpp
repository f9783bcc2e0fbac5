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

#include "register.hpp"

#include <numeric>

#include "fastlocc/error.hpp"

namespace fastlocc::detail {
namespace {

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

}  // namespace

void apply_on_sites(std::vector<cplx>& state, std::span<const std::size_t> dims,
                    std::span<const std::size_t> sites, const ComplexMatrix& op) {
  const auto strides = strides_of(dims);
  std::size_t sub = 1;
  std::vector<bool> acted(dims.size(), false);
  for (std::size_t s : sites) {
    sub *= dims[s];
    acted[s] = true;
  }
  if (op.rows() != sub || op.cols() != sub)
    throw Error(Errc::invalid_dims, "operator size does not match the acted sites");

  // offsets of every sub-index, first listed site most significant
  std::vector<std::size_t> offsets(sub, 0);
  for (std::size_t j = 0; j < sub; ++j) {
    std::size_t rem = j;
    std::size_t off = 0;
    for (std::size_t t = sites.size(); t-- > 0;) {
      off += (rem % dims[sites[t]]) * strides[sites[t]];
      rem /= dims[sites[t]];
    }
    offsets[j] = off;
  }
  // bases: all indices with acted sites at zero
  std::vector<std::size_t> bases{0};
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (acted[s]) continue;
    std::vector<std::size_t> next;
    next.reserve(bases.size() * dims[s]);
    for (std::size_t b : bases)
      for (std::size_t v = 0; v < dims[s]; ++v) next.push_back(b + v * strides[s]);
    bases = std::move(next);
  }
  std::vector<cplx> in(sub);
  for (std::size_t base : bases) {
    for (std::size_t j = 0; j < sub; ++j) in[j] = state[base + offsets[j]];
    const auto out = apply(op, in);
    for (std::size_t j = 0; j < sub; ++j) state[base + offsets[j]] = out[j];
  }
}

std::vector<cplx> slice(std::span<const cplx> state, std::span<const std::size_t> dims,
                        std::size_t site, std::size_t value) {
  const auto strides = strides_of(dims);
  const std::size_t outer = state.size() / (dims[site] * strides[site]);
  const std::size_t inner = strides[site];
  std::vector<cplx> out;
  out.reserve(outer * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * dims[site] * inner + value * inner;
    out.insert(out.end(), state.begin() + static_cast<std::ptrdiff_t>(base),
               state.begin() + static_cast<std::ptrdiff_t>(base + inner));
  }
  return out;
}

std::vector<std::size_t> drop_site(std::span<const std::size_t> dims, std::size_t site) {
  std::vector<std::size_t> out(dims.begin(), dims.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(site));
  return out;
}

std::vector<cplx> insert_middle(std::span<const cplx> psi, std::size_t d_a, std::size_t d_b,
                                std::span<const cplx> mid) {
  std::vector<cplx> out(d_a * mid.size() * d_b);
  for (std::size_t a = 0; a < d_a; ++a)
    for (std::size_t x = 0; x < mid.size(); ++x)
      for (std::size_t b = 0; b < d_b; ++b)
        out[(a * mid.size() + x) * d_b + b] = psi[a * d_b + b] * mid[x];
  return out;
}

double norm_squared(std::span<const cplx> v) {
  return std::accumulate(v.begin(), v.end(), 0.0,
                         [](double acc, const cplx& z) { return acc + std::norm(z); });
}

}  // namespace fastlocc::detail
