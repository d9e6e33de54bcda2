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

#include <vector>

#include <Eigen/Core>

namespace sixdma {

struct Assignment {
  std::vector<int> row_to_col;
  double cost = 0.0;
};

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method
/// with row/column potentials, O(n^3)).
Assignment solve_assignment(const Eigen::MatrixXd& cost);

/// Among all optimal matchings, return the one that is lexicographically
/// smallest in (row 0's column, row 1's column, ...). Costs within
/// `tolerance` of the optimum count as ties.
Assignment solve_assignment_lowest_index(const Eigen::MatrixXd& cost,
                                         double tolerance = 1e-9);

}  // namespace sixdma
