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
#include <tuple>

#include <gtest/gtest.h>

#include "sixdma/assignment.hpp"
#include "sixdma/reconfig_cost.hpp"
#include "sixdma/rng.hpp"
#include "test_support.hpp"

namespace sixdma {
namespace {

using testing::table1_space;

const DistanceTable& table1_distances() {
  static const DistanceTable t{PositionGraph(table1_space())};
  return t;
}

std::vector<int> random_subset(int n, int k, SplitMix64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

struct Oracle {
  int min_sum = 0;
  int min_max_at_min_sum = 0;
  int min_sq_at_min_sum = 0;  // among matchings with min sum and min max
};

Oracle brute_force(const DistanceTable& t, const std::vector<int>& from, const std::vector<int>& to) {
  const int n = static_cast<int>(from.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Oracle o{1 << 30, 1 << 30, 1 << 30};
  do {
    int sum = 0, mx = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
      const int d = t(from[i], to[p[i]]);
      sum += d;
      sq += d * d;
      mx = std::max(mx, d);
    }
    if (std::tie(sum, mx, sq) < std::tie(o.min_sum, o.min_max_at_min_sum, o.min_sq_at_min_sum))
      o = {sum, mx, sq};
  } while (std::next_permutation(p.begin(), p.end()));
  return o;
}

TEST(DefaultKappa, Values) {
  EXPECT_NEAR(default_kappa(16, 12), 0.5 / 2304.0, 1e-15);
  EXPECT_DOUBLE_EQ(default_kappa(1, 1), 0.5);
  EXPECT_LT(default_kappa(7, 12), 1.0 / (7 * 144));
  EXPECT_THROW(default_kappa(0, 12), std::invalid_argument);
}

TEST(PlanTransition, IdentityIsFree) {
  const std::vector<int> pos{3, 17, 40, 99};
  std::vector<int> shuffled{40, 3, 99, 17};
  const auto plan = plan_transition(table1_distances(), pos, shuffled, default_kappa(4, 12));
  EXPECT_EQ(plan.total_steps, 0);
  EXPECT_EQ(plan.max_steps, 0);
}

TEST(PlanTransition, PenaltyPrefersBalancedSteps) {
  // Path graph realizing D = [[3,2],[2,1]].
  const PositionGraph path(std::vector<std::vector<int>>{{1}, {0, 2}, {1, 3}, {2}});
  const DistanceTable t(path);
  const std::vector<int> from{0, 1}, to{3, 2};
  const auto m = build_cost_matrices(t, from, to, 0.01);
  EXPECT_EQ(m.steps(0, 0), 3);
  EXPECT_EQ(m.steps(1, 1), 1);
  const auto plan = plan_transition(t, from, to, 0.01);
  EXPECT_EQ(plan.matching, (std::vector<int>{1, 0}));
  EXPECT_EQ(plan.steps, (std::vector<int>{2, 2}));
  EXPECT_EQ(plan.total_steps, 4);
}

TEST(PlanTransition, DiagonalWhenStrictlyCheaper) {
  Eigen::MatrixXd d(2, 2);
  d << 1, 3, 2, 1;
  const Eigen::MatrixXd c = d + 0.01 * d.cwiseProduct(d);
  EXPECT_EQ(solve_assignment_lowest_index(c).row_to_col, (std::vector<int>{0, 1}));
}

TEST(PlanTransition, MatchesBruteForceOnCatalogGraph) {
  const auto& t = table1_distances();
  auto rng = substream(21, StreamTag::kTest, {});
  for (int trial = 0; trial < 240; ++trial) {
    const int U = 2 + trial % 6;
    const auto from = random_subset(134, U, rng);
    const auto to = random_subset(134, U, rng);
    const auto plan = plan_transition(t, from, to, default_kappa(U, t.diameter()));
    const auto o = brute_force(t, from, to);
    ASSERT_EQ(plan.total_steps, o.min_sum);
    ASSERT_EQ(plan.max_steps, o.min_max_at_min_sum);
    int sq = 0;
    for (int d : plan.steps) sq += d * d;
    ASSERT_EQ(sq, o.min_sq_at_min_sum);
  }
}

TEST(PlanTransition, PenaltyNeverRaisesTotalSteps) {
  const auto& t = table1_distances();
  auto rng = substream(22, StreamTag::kTest, {});
  for (int trial = 0; trial < 200; ++trial) {
    const int U = 2 + trial % 15;
    const auto from = random_subset(134, U, rng);
    const auto to = random_subset(134, U, rng);
    const auto m = build_cost_matrices(t, from, to, 0.0);
    const auto plain = solve_assignment(m.steps.cast<double>());
    const auto plan = plan_transition(t, from, to, default_kappa(U, t.diameter()));
    ASSERT_NEAR(plan.total_steps, plain.cost, 1e-9);
  }
}

TEST(PlanTransition, ScalesDoNotChangeMatching) {
  const auto& t = table1_distances();
  auto rng = substream(23, StreamTag::kTest, {});
  const auto from = random_subset(134, 6, rng);
  const auto to = random_subset(134, 6, rng);
  const double k = default_kappa(6, t.diameter());
  const auto a = plan_transition(t, from, to, k, {1.0, 1.0});
  const auto b = plan_transition(t, from, to, k, {2.5, 0.3});
  EXPECT_EQ(a.matching, b.matching);
  EXPECT_DOUBLE_EQ(b.energy_lower_bound, 2.5 * a.total_steps);
  EXPECT_DOUBLE_EQ(b.time_lower_bound, 0.3 * a.max_steps);
}

TEST(PlanTransition, SizeMismatchThrows) {
  const std::vector<int> a{1, 2}, b{3};
  EXPECT_THROW(plan_transition(table1_distances(), a, b, 0.01), std::invalid_argument);
}

TEST(PlanTransitionCapped, NeighborhoodTargetsStayWithinOneHop) {
  const auto& s = table1_space();
  const auto& t = table1_distances();
  auto rng = substream(24, StreamTag::kTest, {});
  for (int trial = 0; trial < 300; ++trial) {
    const int U = 2 + trial % 15;
    const auto from = random_subset(134, U, rng);
    std::vector<int> to;
    for (int src : from) {
      auto nb = closed_neighborhood(s, src);
      std::shuffle(nb.begin(), nb.end(), rng);
      for (int c : nb)
        if (std::find(to.begin(), to.end(), c) == to.end()) {
          to.push_back(c);
          break;
        }
    }
    if (to.size() != from.size()) continue;
    const auto plan = plan_transition_capped(t, from, to, default_kappa(U, t.diameter()), 1);
    ASSERT_LE(plan.max_steps, 1);
    const auto free = plan_transition(t, from, to, default_kappa(U, t.diameter()));
    ASSERT_LE(free.total_steps, plan.total_steps);
  }
}

TEST(PlanTransitionCapped, ThrowsWhenNoMatchingFits) {
  const std::vector<int> from{0}, to{133};
  EXPECT_THROW(plan_transition_capped(table1_distances(), from, to, 0.1, 1), std::invalid_argument);
}

// One-hop moves per antenna do not imply a one-hop identity-free optimum:
// this period from a default run has a cheaper matching that uses two hops.
TEST(PlanTransitionCapped, IdentityFreeOptimumCanNeedTwoHops) {
  const auto& s = table1_space();
  const auto& t = table1_distances();
  const std::vector<int> from{62, 63, 64, 65, 66, 68, 69, 71, 72, 75, 77, 78, 80, 81, 83, 84};
  const std::vector<int> to{73, 76, 64, 65, 79, 67, 82, 70, 71, 74, 77, 89, 68, 80, 83, 61};
  for (std::size_t u = 0; u < from.size(); ++u) {
    const auto nb = closed_neighborhood(s, from[u]);
    ASSERT_NE(std::find(nb.begin(), nb.end(), to[u]), nb.end());
  }
  const double k = default_kappa(16, t.diameter());
  const auto capped = plan_transition_capped(t, from, to, k, 1);
  const auto free = plan_transition(t, from, to, k);
  EXPECT_EQ(capped.max_steps, 1);
  EXPECT_LT(free.total_steps, capped.total_steps);
  EXPECT_EQ(free.max_steps, 2);
}

}  // namespace
}  // namespace sixdma
