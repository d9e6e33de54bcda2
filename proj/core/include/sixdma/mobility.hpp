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
#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/grid.hpp"
#include "sixdma/rng.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

/// Two orthogonal roads crossing at the center of the area, one lane per
/// travel direction at +-lane_offset from the road axis.
struct MobilityParams {
  double area_x = 300.0;
  double area_y = 300.0;
  double lane_offset = 3.5;
  double z_veh = 1.5;
  double speed_mean = 15.0;
  double speed_std = 3.0;
  double speed_min = 10.0;
  double speed_max = 20.0;

  void validate() const;
};

enum class Road { kEastWest, kNorthSouth };

struct Vehicle {
  Vec3 position;
  double speed = 0.0;
  Vec3 direction;
  Road road = Road::kEastWest;
};

struct FleetState {
  std::vector<Vehicle> vehicles;

  int size() const noexcept { return static_cast<int>(vehicles.size()); }
  std::vector<Vec3> positions() const;
  double mean_speed() const;
};

/// Truncated Gaussian speed by rejection.
double sample_speed(const MobilityParams& params, SplitMix64& rng);

/// Uniform placement along the roads; lane (and thus direction) uniform.
FleetState spawn_fleet(int vehicles, const MobilityParams& params, SplitMix64& rng);

/// Wrap a position back into the area (vehicles leaving re-enter at the
/// opposite end of their road).
Vec3 wrap_position(const Vec3& p, const MobilityParams& params);

/// One slot of the linear kinematic model, then per-vehicle speed resampling.
FleetState step_fleet(const FleetState& state, double dt, const MobilityParams& params,
                      SplitMix64& rng);

struct GridDensity {
  int grid = 0;
  double rho = 0.0;
};

/// Predicted trajectories for one reconfiguration period and the
/// cumulative grid occupancy they induce.
struct PeriodForecast {
  std::vector<std::vector<Vec3>> predicted;  // [slot][vehicle]
  std::vector<GridDensity> active;           // ascending grid index, rho > 0
  double rho_max = 0.0;

  bool empty() const noexcept { return active.empty(); }
};

/// Every vehicle advances at the common mean speed observed at the start
/// of the period; slot 0 is the current observation.
PeriodForecast forecast_period(const FleetState& state, double dt, int slots, const GridSpec& grid,
                               const MobilityParams& params);

/// Mean sum rate over a sequence of user snapshots with a fixed surface
/// set. Slot s of the sequence draws fading for absolute slot first_slot + s.
double period_mean_rate(std::span<const Surface> surfaces,
                        std::span<const std::vector<Vec3>> positions_per_slot,
                        const RadioParams& params, std::uint64_t seed, std::uint64_t first_slot);

}  // namespace sixdma
