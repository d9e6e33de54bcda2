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

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "sixdma/geometry.hpp"
#include "sixdma/graph.hpp"

namespace sixdma {

/// Energy per single-step move and duration of one step.
struct CostScales {
  double unit_energy = 1.0;
  double unit_step_time = 1.0;
};

struct CostMatrices {
  Eigen::MatrixXi steps;        // D: BFS hops from source u to target v
  Eigen::MatrixXd penalized;    // C = D + kappa * D^2
  double kappa = 0.0;
  int graph_diameter = 0;
};

struct TransitionPlan {
  std::vector<int> matching;  // source antenna u -> target slot v
  std::vector<int> steps;     // hops travelled by antenna u
  int total_steps = 0;
  int max_steps = 0;
  double energy_lower_bound = 0.0;
  double time_lower_bound = 0.0;
};

/// kappa = 0.5 / (U * d_max^2), strictly inside the bound that keeps the
/// total-step objective dominant over the quadratic penalty.
double default_kappa(int antennas, int graph_diameter);

CostMatrices build_cost_matrices(const DistanceTable& table, std::span<const int> from,
                                 std::span<const int> to, double kappa);

/// Lower bounds on movement energy and reconfiguration time between two
/// position sets. The assignment minimizes sum(d + kappa d^2); with a kappa
/// below the bound this gives the minimum total steps. Among those it keeps
/// the smallest possible max_steps, then the smallest sum of squares. Ties go
/// to the lowest source, then target index.
TransitionPlan plan_transition(const DistanceTable& table, std::span<const int> from,
                               std::span<const int> to, double kappa, CostScales scales = {});

TransitionPlan plan_transition(const DistanceTable& table, const Deployment& from,
                               const Deployment& to, double kappa, CostScales scales = {});

/// Cheapest matching in which no antenna travels more than `max_hops`.
/// Throws std::invalid_argument when none exists.
TransitionPlan plan_transition_capped(const DistanceTable& table, std::span<const int> from,
                                      std::span<const int> to, double kappa, int max_hops,
                                      CostScales scales = {});

TransitionPlan plan_transition_capped(const DistanceTable& table, const Deployment& from,
                                      const Deployment& to, double kappa, int max_hops,
                                      CostScales scales = {});

}  // namespace sixdma
