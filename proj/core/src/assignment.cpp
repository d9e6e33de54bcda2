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

#include "sixdma/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sixdma {

Assignment solve_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) throw std::invalid_argument("assignment: cost matrix must be square");
  const int n = static_cast<int>(cost.rows());
  Assignment out;
  out.row_to_col.assign(n, -1);
  if (n == 0) return out;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is a virtual column holding the row being added.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (int j = 1; j <= n; ++j) out.row_to_col[match[j] - 1] = j - 1;
  for (int r = 0; r < n; ++r) out.cost += cost(r, out.row_to_col[r]);
  return out;
}

namespace {

Eigen::MatrixXd drop_row_col(const Eigen::MatrixXd& m, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

}  // namespace

Assignment solve_assignment_lowest_index(const Eigen::MatrixXd& cost, double tolerance) {
  const Assignment best = solve_assignment(cost);
  const int n = static_cast<int>(cost.rows());
  const double slack = tolerance * std::max(1.0, std::abs(best.cost));

  // Fix rows in order, each to the lowest column that still admits an
  // optimal completion.
  Assignment out;
  out.row_to_col.assign(n, -1);
  std::vector<int> free_cols(n);
  for (int c = 0; c < n; ++c) free_cols[c] = c;
  double committed = 0.0;
  for (int r = 0; r < n; ++r) {
    std::vector<int> rest_rows;
    for (int rr = r + 1; rr < n; ++rr) rest_rows.push_back(rr);
    bool fixed = false;
    for (std::size_t k = 0; k < free_cols.size() && !fixed; ++k) {
      const int c = free_cols[k];
      std::vector<int> rest_cols;
      for (int cc : free_cols)
        if (cc != c) rest_cols.push_back(cc);
      const double rest =
          rest_rows.empty() ? 0.0 : solve_assignment(drop_row_col(cost, rest_rows, rest_cols)).cost;
      if (committed + cost(r, c) + rest <= best.cost + slack) {
        out.row_to_col[r] = c;
        committed += cost(r, c);
        free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(k));
        fixed = true;
      }
    }
    if (!fixed) return best;  // numerical corner case; fall back to the plain optimum
  }
  out.cost = committed;
  return out;
}

}  // namespace sixdma
