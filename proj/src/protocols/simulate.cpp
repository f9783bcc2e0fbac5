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
#include <numbers>
#include <string>

#include "fastlocc/error.hpp"
#include "fastlocc/protocols.hpp"
#include "register.hpp"

namespace fastlocc {
namespace {

struct RawBranch {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t g = 0;
  std::vector<cplx> pre;
  std::vector<cplx> post;
  std::string corrections;
};

// X^k on the group register: |j> -> |j - k>.
ComplexMatrix group_shift(const AbelianCycleStructure& group, std::size_t k) {
  const std::size_t n = group.order();
  ComplexMatrix x(n, n);
  for (std::size_t j = 0; j < n; ++j) x(group.subtract(j, k), j) = 1.0;
  return x;
}

// Tensor product of per-cycle Fourier transforms.
ComplexMatrix group_fourier(const AbelianCycleStructure& group) {
  ComplexMatrix f = character_table(group);
  f *= cplx(1.0 / std::sqrt(static_cast<double>(group.order())), 0.0);
  return f;
}

// sum_j |j><j| (x) blocks[j], control most significant.
ComplexMatrix controlled_blocks(std::span<const ComplexMatrix> blocks) {
  const std::size_t n = blocks.size();
  const std::size_t d = blocks.front().rows();
  ComplexMatrix out(n * d, n * d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(j * d + r, j * d + c) = blocks[j](r, c);
  return out;
}

// sum_f U(f) (x) |f><f| on (A, a): target first, control second.
ComplexMatrix controlled_blocks_target_first(std::span<const ComplexMatrix> blocks) {
  const std::size_t n = blocks.size();
  const std::size_t d = blocks.front().rows();
  ComplexMatrix out(d * n, d * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r * n + f, c * n + f) = blocks[f](r, c);
  return out;
}

ComplexMatrix z_weighted(const ControlledUnitarySpec& spec, std::size_t m) {
  const std::size_t da = spec.d_a();
  ComplexMatrix z(da, da);
  for (std::size_t i = 0; i < spec.subset.size(); ++i)
    z += weighted_pair_phase(spec.group, spec.subset[i], m) * spec.projector(i);
  return z;
}

std::vector<RawBranch> run_controlled(const ControlledUnitarySpec& spec, std::span<const cplx> psi,
                                      ControlledProtocol protocol) {
  const std::size_t n = spec.order();
  const std::size_t da = spec.d_a();
  const std::size_t db = spec.d_b();
  const std::vector<std::size_t> dims{da, n, n, db};
  std::vector<cplx> state = detail::insert_middle(psi, da, db, resource_state(n));

  ComplexMatrix alice(da * n, da * n);
  for (std::size_t i = 0; i < spec.subset.size(); ++i)
    alice += tensor_product(spec.projector(i), group_shift(spec.group, spec.subset[i]));
  const std::size_t sites_aa[] = {0, 1};
  detail::apply_on_sites(state, dims, sites_aa, alice);

  const ComplexMatrix bob_cv = controlled_blocks(spec.v);
  const ComplexMatrix fourier = group_fourier(spec.group);
  std::vector<RawBranch> out;
  out.reserve(n * n);

  if (protocol == ControlledProtocol::fast) {
    const std::size_t sites_bb[] = {2, 3};
    const std::size_t site_b[] = {2};
    detail::apply_on_sites(state, dims, sites_bb, bob_cv);
    detail::apply_on_sites(state, dims, site_b, fourier);
    const auto dims_l = detail::drop_site(dims, 1);
    for (std::size_t l = 0; l < n; ++l) {
      const auto after_l = detail::slice(state, dims, 1, l);
      const ComplexMatrix vl_dag = spec.v[l].adjoint();
      for (std::size_t m = 0; m < n; ++m) {
        RawBranch br;
        br.l = l;
        br.m = m;
        br.g = l;
        br.pre = detail::slice(after_l, dims_l, 1, m);
        br.post = apply(tensor_product(z_weighted(spec, m), vl_dag), br.pre);
        br.corrections = "V_" + std::to_string(l) + "^dagger on B; Z_" + std::to_string(m) + " on A";
        out.push_back(std::move(br));
      }
    }
    return out;
  }

  for (std::size_t l = 0; l < n; ++l) {
    auto after_l = detail::slice(state, dims, 1, l);
    const auto dims_l = detail::drop_site(dims, 1);
    const std::size_t site_b[] = {1};
    const std::size_t sites_bb[] = {1, 2};
    detail::apply_on_sites(after_l, dims_l, site_b, group_shift(spec.group, l));
    detail::apply_on_sites(after_l, dims_l, sites_bb, bob_cv);
    detail::apply_on_sites(after_l, dims_l, site_b, fourier);
    for (std::size_t m = 0; m < n; ++m) {
      RawBranch br;
      br.l = l;
      br.m = m;
      br.g = l;
      br.pre = detail::slice(after_l, dims_l, 1, m);
      br.post = apply(tensor_product(z_weighted(spec, m), ComplexMatrix::identity(db)), br.pre);
      br.corrections = "Z_" + std::to_string(m) + " on A";
      out.push_back(std::move(br));
    }
  }
  return out;
}

struct DoublePlan {
  ExchangeReport exchange;
  std::optional<PermutationCertificate> p;
  std::vector<cplx> d;
};

DoublePlan plan_double(const DoubleGroupSpec& spec, DoubleProtocol protocol, double tol) {
  DoublePlan plan;
  if (protocol == DoubleProtocol::slow) return plan;
  plan.exchange = verify_exchange(spec.tc, tol);
  if (!plan.exchange.ok())
    throw Error(Errc::precondition_violated,
                "C Z_l C^dagger is not a complex permutation for l=" +
                    std::to_string(plan.exchange.failure->l));
  if (protocol == DoubleProtocol::symmetrized) {
    const double s = std::sqrt(static_cast<double>(spec.order()));
    const auto report = theorem2_check(cplx(s, 0.0) * spec.tc.t, spec.tc.c, tol);
    if (!report.passed())
      throw Error(Errc::precondition_violated, "no C = P T D decomposition: " + report.failure);
    plan.p = report.p;
    plan.d = report.d;
  }
  return plan;
}

std::vector<RawBranch> run_double(const DoubleGroupSpec& spec, std::span<const cplx> psi,
                                  DoubleProtocol protocol, const DoublePlan& plan) {
  const std::size_t n = spec.order();
  const std::size_t da = spec.d_a();
  const std::size_t db = spec.d_b();
  const std::vector<std::size_t> dims{da, n, n, db};
  std::vector<cplx> state = detail::insert_middle(psi, da, db, resource_state(n, plan.d));

  const std::size_t sites_aa[] = {0, 1};
  const std::size_t sites_bb[] = {2, 3};
  const std::size_t site_a[] = {1};
  detail::apply_on_sites(state, dims, sites_aa, controlled_blocks_target_first(spec.u));
  detail::apply_on_sites(state, dims, site_a, spec.tc.t);
  detail::apply_on_sites(state, dims, sites_bb, controlled_blocks(spec.v));

  std::vector<ComplexMatrix> gamma_dag(n);
  for (std::size_t f = 0; f < n; ++f) gamma_dag[f] = spec.gamma(f).adjoint();

  std::vector<RawBranch> out;
  out.reserve(n * n);
  const auto dims_l = detail::drop_site(dims, 1);
  if (protocol != DoubleProtocol::slow) {
    const std::size_t site_b[] = {2};
    detail::apply_on_sites(state, dims, site_b,
                           protocol == DoubleProtocol::fast ? spec.tc.c : spec.tc.t);
  }
  const double s = std::sqrt(static_cast<double>(n));
  for (std::size_t l = 0; l < n; ++l) {
    auto after_l = detail::slice(state, dims, 1, l);
    if (protocol == DoubleProtocol::slow) {
      const std::size_t site_b[] = {1};
      detail::apply_on_sites(after_l, dims_l, site_b, z_row_gate(cplx(s, 0.0) * spec.tc.t, l));
      detail::apply_on_sites(after_l, dims_l, site_b, spec.tc.c);
    }
    for (std::size_t m = 0; m < n; ++m) {
      RawBranch br;
      br.l = l;
      br.m = m;
      switch (protocol) {
        case DoubleProtocol::slow:
          br.g = m;
          break;
        case DoubleProtocol::fast:
          br.g = correction_map(plan.exchange, l, m).g;
          break;
        case DoubleProtocol::symmetrized:
          br.g = symmetrized_correction_map(plan.exchange, *plan.p, l, m).g;
          break;
      }
      br.pre = detail::slice(after_l, dims_l, 1, m);
      br.post = apply(gamma_dag[br.g], br.pre);
      br.corrections = "Gamma(" + std::to_string(br.g) + ")^dagger on A,B";
      out.push_back(std::move(br));
    }
  }
  return out;
}

std::vector<BranchTranscript> check_branches(std::vector<RawBranch> raw, const ComplexMatrix& u,
                                             const StateVector& input, double tol) {
  const auto expected = apply(u, input.amplitudes());
  std::vector<BranchTranscript> out;
  out.reserve(raw.size());
  double total = 0.0;
  for (auto& br : raw) {
    BranchTranscript t;
    t.l = br.l;
    t.m = br.m;
    t.corrections = std::move(br.corrections);
    t.probability = detail::norm_squared(br.post);
    total += t.probability;
    if (t.probability <= kBranchCutoff) {
      t.skipped = true;
      out.push_back(std::move(t));
      continue;
    }
    auto final_state = StateVector::normalized(std::move(br.post));
    const auto theta = equal_up_to_global_phase(final_state.amplitudes(), expected, tol);
    const cplx w = std::polar(1.0, theta.value_or(0.0));
    double residual = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
      residual = std::max(residual, std::abs(final_state[i] - w * expected[i]));
    if (!theta)
      throw Error(Errc::protocol_violation,
                  "branch (l=" + std::to_string(t.l) + ", m=" + std::to_string(t.m) +
                      ") differs from the target beyond a phase; residual " +
                      std::to_string(residual));
    t.theta = *theta;
    t.residual = residual;
    t.final_state = std::move(final_state);
    out.push_back(std::move(t));
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw Error(Errc::protocol_violation,
                "branch probabilities sum to " + std::to_string(total));
  return out;
}

void require_input(const StateVector& input, std::size_t dim) {
  if (input.dim() != dim)
    throw Error(Errc::invalid_dims, "input has dimension " + std::to_string(input.dim()) +
                                        ", expected " + std::to_string(dim));
}

std::vector<BranchTranscript> simulate_controlled(const ControlledUnitarySpec& spec,
                                                  const StateVector& input, double tol,
                                                  ControlledProtocol protocol) {
  validate_controlled_spec(spec, tol);
  const ComplexMatrix u = target_unitary(spec, tol);
  require_input(input, u.rows());
  return check_branches(run_controlled(spec, input.amplitudes(), protocol), u, input, tol);
}

std::vector<BranchTranscript> simulate_double(const DoubleGroupSpec& spec,
                                              const StateVector& input, double tol,
                                              DoubleProtocol protocol) {
  validate_double_spec(spec, tol);
  const ComplexMatrix u = target_unitary(spec, tol);
  require_input(input, u.rows());
  const DoublePlan plan = plan_double(spec, protocol, tol);
  return check_branches(run_double(spec, input.amplitudes(), protocol, plan), u, input, tol);
}

template <typename Run>
std::vector<BranchMap> collect_maps(std::size_t dim, std::size_t n, Run run) {
  std::vector<BranchMap> maps(n * n);
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<cplx> e(dim);
    e[x] = 1.0;
    auto raw = run(e);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      BranchMap& bm = maps[i];
      if (x == 0) {
        bm.l = raw[i].l;
        bm.m = raw[i].m;
        bm.g = raw[i].g;
        bm.pre_correction = ComplexMatrix(dim, dim);
        bm.post_correction = ComplexMatrix(dim, dim);
      }
      for (std::size_t r = 0; r < dim; ++r) {
        bm.pre_correction(r, x) = raw[i].pre[r];
        bm.post_correction(r, x) = raw[i].post[r];
      }
    }
  }
  return maps;
}

}  // namespace

CorrectionTarget correction_map(const ExchangeReport& exchange, std::size_t l, std::size_t m) {
  if (l >= exchange.certificates.size())
    throw Error(Errc::invalid_state, "no exchange certificate for l=" + std::to_string(l));
  const PermutationCertificate& cert = exchange.certificates[l];
  const std::size_t g = cert.row_of_column(m);
  return {g, std::conj(cert.phases[g])};
}

CorrectionTarget symmetrized_correction_map(const ExchangeReport& exchange,
                                            const PermutationCertificate& p, std::size_t l,
                                            std::size_t m) {
  if (l >= exchange.certificates.size())
    throw Error(Errc::invalid_state, "no exchange certificate for l=" + std::to_string(l));
  const PermutationCertificate combined = exchange.certificates[l].then(p);
  const std::size_t g = combined.row_of_column(m);
  return {g, std::conj(combined.phases[g])};
}

std::vector<BranchTranscript> simulate_fast_controlled(const ControlledUnitarySpec& spec,
                                                       const StateVector& input, double tol) {
  return simulate_controlled(spec, input, tol, ControlledProtocol::fast);
}

std::vector<BranchTranscript> simulate_slow_controlled(const ControlledUnitarySpec& spec,
                                                       const StateVector& input, double tol) {
  return simulate_controlled(spec, input, tol, ControlledProtocol::slow);
}

std::vector<BranchTranscript> simulate_fast_double(const DoubleGroupSpec& spec,
                                                   const StateVector& input, double tol) {
  return simulate_double(spec, input, tol, DoubleProtocol::fast);
}

std::vector<BranchTranscript> simulate_slow_double(const DoubleGroupSpec& spec,
                                                   const StateVector& input, double tol) {
  return simulate_double(spec, input, tol, DoubleProtocol::slow);
}

std::vector<BranchTranscript> simulate_symmetrized(const DoubleGroupSpec& spec,
                                                   const StateVector& input, double tol) {
  return simulate_double(spec, input, tol, DoubleProtocol::symmetrized);
}

std::vector<BranchMap> branch_maps(const ControlledUnitarySpec& spec, ControlledProtocol protocol) {
  const std::size_t dim = spec.d_a() * spec.d_b();
  return collect_maps(dim, spec.order(), [&](const std::vector<cplx>& e) {
    return run_controlled(spec, e, protocol);
  });
}

std::vector<BranchMap> branch_maps(const DoubleGroupSpec& spec, DoubleProtocol protocol,
                                   double tol) {
  const DoublePlan plan = plan_double(spec, protocol, tol);
  const std::size_t dim = spec.d_a() * spec.d_b();
  return collect_maps(dim, spec.order(), [&](const std::vector<cplx>& e) {
    return run_double(spec, e, protocol, plan);
  });
}

}  // namespace fastlocc
