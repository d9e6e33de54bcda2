// SPDX-License-Identifier: Apache-2.0
//
// sixdma: discrete six-dimensional movable antenna reconfiguration
// Copyright (C) 2026 The sixdma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "sixdma/reconfig_cost.hpp"

#include <algorithm>
#include <optional>

#include <fmt/format.h>

#include "sixdma/assignment.hpp"

namespace sixdma {

double default_kappa(int antennas, int graph_diameter) {
  if (antennas < 1 || graph_diameter < 1)
    throw std::invalid_argument("default_kappa: antennas and diameter must be >= 1");
  return 0.5 / (static_cast<double>(antennas) * graph_diameter * graph_diameter);
}

CostMatrices build_cost_matrices(const DistanceTable& table, std::span<const int> from,
                                 std::span<const int> to, double kappa) {
  if (from.size() != to.size())
    throw std::invalid_argument(
        fmt::format("plan_transition: size mismatch ({} sources, {} targets)", from.size(), to.size()));
  const auto n = static_cast<Eigen::Index>(from.size());
  CostMatrices m;
  m.kappa = kappa;
  m.graph_diameter = table.diameter();
  m.steps.resize(n, n);
  m.penalized.resize(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v) {
      const int d = table(from[u], to[v]);
      m.steps(u, v) = d;
      m.penalized(u, v) = d + kappa * static_cast<double>(d) * d;
    }
  }
  return m;
}

namespace {

TransitionPlan plan_from(const CostMatrices& m, const Eigen::MatrixXd& cost, CostScales scales) {
  const auto assignment = solve_assignment_lowest_index(cost);
  TransitionPlan plan;
  plan.matching = assignment.row_to_col;
  plan.steps.resize(plan.matching.size());
  for (std::size_t u = 0; u < plan.matching.size(); ++u) {
    const int d = m.steps(static_cast<Eigen::Index>(u), plan.matching[u]);
    plan.steps[u] = d;
    plan.total_steps += d;
    plan.max_steps = std::max(plan.max_steps, d);
  }
  plan.energy_lower_bound = scales.unit_energy * plan.total_steps;
  plan.time_lower_bound = scales.unit_step_time * plan.max_steps;
  return plan;
}

std::optional<TransitionPlan> capped_plan(const CostMatrices& m, int max_hops, CostScales scales) {
  const auto n = static_cast<double>(m.steps.rows());
  const double far = m.graph_diameter + 1.0;
  const double forbidden = (n + 1.0) * (far + m.kappa * far * far);
  Eigen::MatrixXd cost = m.penalized;
  for (Eigen::Index u = 0; u < cost.rows(); ++u)
    for (Eigen::Index v = 0; v < cost.cols(); ++v)
      if (m.steps(u, v) > max_hops) cost(u, v) = forbidden;
  auto plan = plan_from(m, cost, scales);
  if (plan.max_steps > max_hops) return std::nullopt;
  return plan;
}

}  // namespace

TransitionPlan plan_transition(const DistanceTable& table, std::span<const int> from,
                               std::span<const int> to, double kappa, CostScales scales) {
  const auto m = build_cost_matrices(table, from, to, kappa);
  auto plan = plan_from(m, m.penalized, scales);
  // The penalty balances steps but can leave a longer move than needed; take
  // the smallest cap that keeps the minimum total.
  for (int cap = 0; cap < plan.max_steps; ++cap) {
    auto tighter = capped_plan(m, cap, scales);
    if (tighter && tighter->total_steps == plan.total_steps) return *tighter;
  }
  return plan;
}

TransitionPlan plan_transition(const DistanceTable& table, const Deployment& from,
                               const Deployment& to, double kappa, CostScales scales) {
  const auto a = from.position_indices();
  const auto b = to.position_indices();
  return plan_transition(table, a, b, kappa, scales);
}

TransitionPlan plan_transition_capped(const DistanceTable& table, std::span<const int> from,
                                      std::span<const int> to, double kappa, int max_hops,
                                      CostScales scales) {
  const auto m = build_cost_matrices(table, from, to, kappa);
  auto plan = capped_plan(m, max_hops, scales);
  if (!plan)
    throw std::invalid_argument(
        fmt::format("plan_transition_capped: no matching keeps every move within {} hops", max_hops));
  return *plan;
}

TransitionPlan plan_transition_capped(const DistanceTable& table, const Deployment& from,
                                      const Deployment& to, double kappa, int max_hops,
                                      CostScales scales) {
  const auto a = from.position_indices();
  const auto b = to.position_indices();
  return plan_transition_capped(table, a, b, kappa, max_hops, scales);
}

}  // namespace sixdma
