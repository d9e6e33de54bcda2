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

#include <set>

#include <gtest/gtest.h>

#include "sixdma/baselines.hpp"
#include "sixdma/graph.hpp"
#include "sixdma/optimizer.hpp"
#include "test_support.hpp"

namespace sixdma {
namespace {

const Vec3 kBs(150, 150, 10);

int total_elements(const SchemeLayout& l) {
  int n = 0;
  for (const auto& s : l.surfaces) n += s.elements();
  return n;
}

TEST(Schemes, NamesRoundTrip) {
  for (Scheme s : all_schemes()) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_EQ(all_schemes().size(), 5u);
  EXPECT_THROW(parse_scheme("fixed"), std::invalid_argument);
}

TEST(SectorShape, SquarestFactorization) {
  EXPECT_EQ((sector_array_shape(16)), (std::array<int, 2>{4, 4}));
  EXPECT_EQ((sector_array_shape(12)), (std::array<int, 2>{3, 4}));
  EXPECT_EQ((sector_array_shape(7)), (std::array<int, 2>{1, 7}));
  EXPECT_THROW(sector_array_shape(0), std::invalid_argument);
}

TEST(Downtilt, FifteenDegreesBelowHorizon) {
  const Vec3 n = downtilted_normal(Vec3(0.3, 0.4, 0.01), 15.0);
  EXPECT_NEAR(n.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::asin(-n.z()), deg_to_rad(15.0), 1e-12);
  EXPECT_NEAR(n.x() / n.y(), 0.75, 1e-12);
}

TEST(Fpa, FourFeasibleSectorsWithElementParity) {
  const auto& s = testing::table1_space();
  const RadioParams r;
  const auto l = fpa_layout(s, kBs, r, 16);
  ASSERT_EQ(l.surfaces.size(), 4u);
  EXPECT_EQ(total_elements(l), 16 * r.elements_per_surface);
  EXPECT_TRUE(check_placements(l.placements, s.params().d_min).feasible());
  const int row = equator_row(s);
  std::set<int> az;
  for (const auto& e : l.deployment.entries) {
    EXPECT_EQ(s.latitude_index(e.position), row + 1);
    az.insert(s.meridian_index(e.position));
  }
  EXPECT_EQ(az.size(), 4u);
  for (const auto& p : l.placements) EXPECT_NEAR(std::asin(-p.normal.z()), deg_to_rad(15.0), 1e-12);
}

TEST(Fpa, StaticAcrossCalls) {
  const auto& s = testing::table1_space();
  EXPECT_EQ(fpa_layout(s, kBs, RadioParams{}, 16).deployment, fpa_layout(s, kBs, RadioParams{}, 16).deployment);
}

TEST(Circular, OffsetsStayFeasible) {
  const auto& s = testing::table1_space();
  const RadioParams r;
  for (int o = 0; o < s.meridians(); ++o) {
    const auto l = circular_layout(s, o, kBs, r, 16);
    EXPECT_TRUE(check_placements(l.placements, s.params().d_min).feasible());
    EXPECT_EQ(total_elements(l), 64);
  }
}

TEST(Circular, SteersTowardTraffic) {
  const auto& s = testing::table1_space();
  const RadioParams r;
  const GridSpec grid;
  // All traffic in one grid: the chosen offset must do at least as well as every alternative.
  PeriodForecast f;
  const int g = grid.index_of(210.0, 175.0);
  f.active = {{g, 10.0}};
  f.rho_max = 10.0;
  const int best = circular_best_offset(s, f, grid, kBs, r, 16, 0);
  auto value = [&](int o) {
    double v = 0.0;
    for (const auto& surf : circular_layout(s, o, kBs, r, 16).surfaces)
      v = std::max(v, single_surface_rate(surf, grid.center(g), r));
    return v;
  };
  for (int o = 0; o < 3; ++o) EXPECT_GE(value(best), value(o));
  EXPECT_EQ(circular_best_offset(s, PeriodForecast{}, grid, kBs, r, 16, 2), 2);
}

TEST(RotationOnly, PositionsMatchFpa) {
  const auto& s = testing::table1_space();
  const RadioParams r;
  const auto lib = build_library(s, GridSpec{}, kBs, r, LibraryHyper{}, 7);
  const auto fpa = fpa_layout(s, kBs, r, 16);
  const MobilityParams mp;
  auto rng = substream(3, StreamTag::kTest, {});
  auto fleet = spawn_fleet(30, mp, rng);
  for (int l = 0; l < 10; ++l) {
    const auto f = forecast_period(fleet, 0.1, 10, GridSpec{}, mp);
    const auto ro = rotation_only_layout(s, f, lib, kBs, r, 16);
    EXPECT_EQ(ro.deployment.position_indices(), fpa.deployment.position_indices());
    EXPECT_TRUE(check_deployment(s, ro.deployment).feasible());
    EXPECT_EQ(total_elements(ro), 64);
    for (int t = 0; t < 10; ++t) fleet = step_fleet(fleet, 0.1, mp, rng);
  }
}

TEST(Sectors, RejectIndivisibleElementCount) {
  const auto& s = testing::table1_space();
  RadioParams r;
  r.elements_per_surface = 1;
  EXPECT_THROW(fpa_layout(s, kBs, r, 3), std::invalid_argument);
}

}  // namespace
}  // namespace sixdma
