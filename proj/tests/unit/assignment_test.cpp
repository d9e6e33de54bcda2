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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "sixdma/assignment.hpp"
#include "sixdma/rng.hpp"

namespace sixdma {
namespace {

struct BruteForce {
  double best = 0.0;
  std::vector<int> lexmin;  // lexicographically smallest optimal permutation
};

BruteForce brute_force(const Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BruteForce out;
  out.best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += c(i, p[i]);
    if (s < out.best - 1e-9) {
      out.best = s;
      out.lexmin = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TEST(Assignment, MatchesBruteForceOnRandomReals) {
  auto rng = substream(11, StreamTag::kTest, {});
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    Eigen::MatrixXd c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = u(rng);
    const auto a = solve_assignment(c);
    EXPECT_NEAR(a.cost, brute_force(c).best, 1e-9);
    std::vector<int> cols = a.row_to_col;
    std::sort(cols.begin(), cols.end());
    for (int i = 0; i < n; ++i) EXPECT_EQ(cols[i], i);
  }
}

TEST(Assignment, LowestIndexTieBreak) {
  auto rng = substream(12, StreamTag::kTest, {});
  std::uniform_int_distribution<int> u(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    Eigen::MatrixXd c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = u(rng);
    const auto a = solve_assignment_lowest_index(c);
    const auto bf = brute_force(c);
    EXPECT_NEAR(a.cost, bf.best, 1e-9);
    EXPECT_EQ(a.row_to_col, bf.lexmin);
  }
}

TEST(Assignment, AllEqualGivesIdentity) {
  const auto a = solve_assignment_lowest_index(Eigen::MatrixXd::Ones(5, 5));
  EXPECT_EQ(a.row_to_col, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Assignment, EmptyAndNonSquare) {
  EXPECT_TRUE(solve_assignment(Eigen::MatrixXd(0, 0)).row_to_col.empty());
  EXPECT_THROW(solve_assignment(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace sixdma
