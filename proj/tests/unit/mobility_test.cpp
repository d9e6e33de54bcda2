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

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "sixdma/mobility.hpp"

namespace sixdma {
namespace {

TEST(GridSpec, IndexingRoundTrip) {
  const GridSpec g;
  EXPECT_EQ(g.nx(), 20);
  EXPECT_EQ(g.count(), 400);
  for (int i = 0; i < g.count(); ++i) {
    const Vec3 c = g.center(i);
    EXPECT_EQ(g.index_of(c.x(), c.y()), i);
  }
  EXPECT_EQ(g.index_of(-1.0, -1.0), 0);
  EXPECT_EQ(g.index_of(300.0, 300.0), 399);
}

TEST(Mobility, SpawnOnLanesWithBoundedSpeed) {
  const MobilityParams p;
  auto rng = substream(1, StreamTag::kTest, {});
  const auto fleet = spawn_fleet(200, p, rng);
  for (const auto& v : fleet.vehicles) {
    EXPECT_GE(v.speed, p.speed_min);
    EXPECT_LE(v.speed, p.speed_max);
    EXPECT_DOUBLE_EQ(v.position.z(), p.z_veh);
    EXPECT_DOUBLE_EQ(v.direction.norm(), 1.0);
    if (v.road == Road::kEastWest)
      EXPECT_DOUBLE_EQ(std::abs(v.position.y() - 150.0), p.lane_offset);
    else
      EXPECT_DOUBLE_EQ(std::abs(v.position.x() - 150.0), p.lane_offset);
  }
}

TEST(Mobility, SpeedsStayInRange) {
  const MobilityParams p;
  auto rng = substream(2, StreamTag::kTest, {});
  for (int i = 0; i < 20000; ++i) {
    const double v = sample_speed(p, rng);
    ASSERT_GE(v, p.speed_min);
    ASSERT_LE(v, p.speed_max);
  }
}

TEST(Mobility, LinearStepAndWrap) {
  const MobilityParams p;
  FleetState s;
  s.vehicles.push_back({Vec3(10, 146.5, 1.5), 12.0, Vec3::UnitX(), Road::kEastWest});
  s.vehicles.push_back({Vec3(153.5, 1.0, 1.5), 20.0, -Vec3::UnitY(), Road::kNorthSouth});
  auto rng = substream(3, StreamTag::kTest, {});
  const auto next = step_fleet(s, 0.1, p, rng);
  EXPECT_NEAR(next.vehicles[0].position.x(), 11.2, 1e-12);
  EXPECT_DOUBLE_EQ(next.vehicles[0].position.y(), 146.5);
  EXPECT_NEAR(next.vehicles[1].position.y(), 299.0, 1e-12);
  EXPECT_DOUBLE_EQ(next.vehicles[1].position.x(), 153.5);
}

TEST(Forecast, MassConservation) {
  const MobilityParams p;
  const GridSpec g;
  auto rng = substream(4, StreamTag::kTest, {});
  const auto fleet = spawn_fleet(30, p, rng);
  for (int n : {1, 5, 10, 20}) {
    const auto f = forecast_period(fleet, 0.1, n, g, p);
    double total = 0.0;
    int prev = -1;
    for (const auto& a : f.active) {
      EXPECT_GT(a.rho, 0.0);
      EXPECT_GT(a.grid, prev);
      EXPECT_LE(a.rho, f.rho_max);
      prev = a.grid;
      total += a.rho;
    }
    EXPECT_DOUBLE_EQ(total, 30.0 * n);
    EXPECT_EQ(static_cast<int>(f.predicted.size()), n);
  }
}

TEST(Forecast, SingleSlotIsCurrentPosition) {
  const MobilityParams p;
  const GridSpec g;
  auto rng = substream(5, StreamTag::kTest, {});
  const auto fleet = spawn_fleet(10, p, rng);
  const auto f = forecast_period(fleet, 0.1, 1, g, p);
  std::map<int, double> expected;
  for (const auto& v : fleet.vehicles) expected[g.index_of(v.position.x(), v.position.y())] += 1.0;
  ASSERT_EQ(f.active.size(), expected.size());
  for (const auto& a : f.active) EXPECT_DOUBLE_EQ(a.rho, expected.at(a.grid));
}

TEST(Forecast, StationaryFleetStaysPut) {
  MobilityParams p;
  p.speed_min = p.speed_max = p.speed_mean = 0.0;
  const GridSpec g;
  FleetState s;
  s.vehicles.push_back({Vec3(7, 146.5, 1.5), 0.0, Vec3::UnitX(), Road::kEastWest});
  s.vehicles.push_back({Vec3(8, 146.5, 1.5), 0.0, Vec3::UnitX(), Road::kEastWest});
  s.vehicles.push_back({Vec3(153.5, 200, 1.5), 0.0, Vec3::UnitY(), Road::kNorthSouth});
  const auto f = forecast_period(s, 0.1, 20, g, p);
  ASSERT_EQ(f.active.size(), 2u);
  EXPECT_DOUBLE_EQ(f.rho_max, 40.0);
  EXPECT_DOUBLE_EQ(f.active[0].rho, 40.0);
  EXPECT_DOUBLE_EQ(f.active[1].rho, 20.0);
}

TEST(Forecast, SingleVehicleCrossesFewGrids) {
  const MobilityParams p;
  const GridSpec g;
  FleetState s;
  s.vehicles.push_back({Vec3(14.0, 146.5, 1.5), 20.0, Vec3::UnitX(), Road::kEastWest});
  const auto f = forecast_period(s, 0.1, 20, g, p);
  // 20 slots at 2 m per slot span 38 m.
  EXPECT_GE(f.active.size(), 3u);
  EXPECT_LE(f.active.size(), 4u);
  FleetState slow;
  slow.vehicles.push_back({Vec3(1.0, 146.5, 1.5), 10.0, Vec3::UnitX(), Road::kEastWest});
  const auto fs = forecast_period(slow, 0.1, 20, g, p);
  EXPECT_EQ(fs.active.size(), 2u);
}

TEST(Forecast, UsesFleetMeanSpeed) {
  const MobilityParams p;
  const GridSpec g;
  FleetState s;
  s.vehicles.push_back({Vec3(0.5, 146.5, 1.5), 10.0, Vec3::UnitX(), Road::kEastWest});
  s.vehicles.push_back({Vec3(153.5, 0.5, 1.5), 20.0, Vec3::UnitY(), Road::kNorthSouth});
  const auto f = forecast_period(s, 0.1, 3, g, p);
  EXPECT_NEAR(f.predicted[2][0].x(), 0.5 + 2 * 1.5, 1e-12);
  EXPECT_NEAR(f.predicted[2][1].y(), 0.5 + 2 * 1.5, 1e-12);
}

TEST(PeriodMeanRate, AveragesPerSlotRates) {
  const RadioParams radio;
  const std::vector<Surface> ss{{Vec3(150, 150, 10), Vec3(1, 0, 0), 2, 2, 1},
                                {Vec3(150, 150.3, 10), Vec3(0, 1, 0), 2, 2, 2}};
  const std::vector<std::vector<Vec3>> slots{{Vec3(200, 146.5, 1.5), Vec3(153.5, 220, 1.5)},
                                             {Vec3(201, 146.5, 1.5), Vec3(153.5, 221, 1.5)},
                                             {Vec3(202, 146.5, 1.5), Vec3(153.5, 222, 1.5)}};
  double expected = 0.0;
  for (std::size_t s = 0; s < slots.size(); ++s)
    expected += sinr_and_rate(assemble_channel(ss, slots[s], radio, 9, 40 + s), radio).sum_rate_bps;
  expected /= 3.0;
  EXPECT_DOUBLE_EQ(period_mean_rate(ss, slots, radio, 9, 40), expected);
  EXPECT_EQ(period_mean_rate(ss, {}, radio, 9, 40), 0.0);
}

}  // namespace
}  // namespace sixdma
