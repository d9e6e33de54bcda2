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

#include "sixdma/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace sixdma {

int GridSpec::nx() const { return static_cast<int>(std::ceil(extent_x / width - 1e-12)); }
int GridSpec::ny() const { return static_cast<int>(std::ceil(extent_y / width - 1e-12)); }

Vec3 GridSpec::center(int g) const {
  if (g < 0 || g >= count()) throw std::out_of_range("GridSpec::center: grid out of range");
  return {(gx(g) + 0.5) * width, (gy(g) + 0.5) * width, z_veh};
}

int GridSpec::index_of(double x, double y) const {
  const int ix = std::clamp(static_cast<int>(std::floor(x / width)), 0, nx() - 1);
  const int iy = std::clamp(static_cast<int>(std::floor(y / width)), 0, ny() - 1);
  return iy * nx() + ix;
}

void GridSpec::validate() const {
  if (!(extent_x > 0 && extent_y > 0 && width > 0))
    throw std::invalid_argument("grid: extents and width must be positive");
}

void MobilityParams::validate() const {
  if (!(area_x > 0 && area_y > 0)) throw std::invalid_argument("mobility: area must be positive");
  if (!(speed_min >= 0 && speed_min <= speed_max))
    throw std::invalid_argument("mobility: need 0 <= speed_min <= speed_max");
  if (!(speed_std >= 0)) throw std::invalid_argument("mobility: speed_std must be >= 0");
}

std::vector<Vec3> FleetState::positions() const {
  std::vector<Vec3> out;
  out.reserve(vehicles.size());
  for (const auto& v : vehicles) out.push_back(v.position);
  return out;
}

double FleetState::mean_speed() const {
  if (vehicles.empty()) return 0.0;
  double s = 0.0;
  for (const auto& v : vehicles) s += v.speed;
  return s / static_cast<double>(vehicles.size());
}

double sample_speed(const MobilityParams& params, SplitMix64& rng) {
  if (params.speed_std <= 0.0 || params.speed_min == params.speed_max)
    return std::clamp(params.speed_mean, params.speed_min, params.speed_max);
  std::normal_distribution<double> gauss(params.speed_mean, params.speed_std);
  for (;;) {
    const double v = gauss(rng);
    if (v >= params.speed_min && v <= params.speed_max) return v;
  }
}

FleetState spawn_fleet(int vehicles, const MobilityParams& params, SplitMix64& rng) {
  params.validate();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double cx = 0.5 * params.area_x;
  const double cy = 0.5 * params.area_y;
  FleetState fleet;
  fleet.vehicles.reserve(vehicles);
  for (int k = 0; k < vehicles; ++k) {
    Vehicle v;
    v.road = unif(rng) < 0.5 ? Road::kEastWest : Road::kNorthSouth;
    const bool forward = unif(rng) < 0.5;
    const double along = unif(rng);
    if (v.road == Road::kEastWest) {
      v.direction = forward ? Vec3::UnitX() : Vec3(-Vec3::UnitX());
      v.position = {along * params.area_x, cy + (forward ? -1.0 : 1.0) * params.lane_offset, params.z_veh};
    } else {
      v.direction = forward ? Vec3::UnitY() : Vec3(-Vec3::UnitY());
      v.position = {cx + (forward ? 1.0 : -1.0) * params.lane_offset, along * params.area_y, params.z_veh};
    }
    v.speed = sample_speed(params, rng);
    fleet.vehicles.push_back(v);
  }
  return fleet;
}

namespace {

double wrap(double x, double extent) {
  double r = std::fmod(x, extent);
  if (r < 0.0) r += extent;
  return r;
}

}  // namespace

Vec3 wrap_position(const Vec3& p, const MobilityParams& params) {
  return {wrap(p.x(), params.area_x), wrap(p.y(), params.area_y), p.z()};
}

FleetState step_fleet(const FleetState& state, double dt, const MobilityParams& params,
                      SplitMix64& rng) {
  FleetState next = state;
  for (auto& v : next.vehicles) {
    v.position = wrap_position(v.position + v.speed * dt * v.direction, params);
    v.speed = sample_speed(params, rng);
  }
  return next;
}

PeriodForecast forecast_period(const FleetState& state, double dt, int slots, const GridSpec& grid,
                               const MobilityParams& params) {
  if (slots < 1) throw std::invalid_argument("forecast_period: need at least one slot");
  PeriodForecast f;
  const double vbar = state.mean_speed();
  std::vector<Vec3> current = state.positions();
  std::map<int, double> density;
  for (int s = 0; s < slots; ++s) {
    if (s > 0) {
      for (std::size_t k = 0; k < current.size(); ++k)
        current[k] = wrap_position(current[k] + vbar * dt * state.vehicles[k].direction, params);
    }
    for (const auto& p : current) density[grid.index_of(p.x(), p.y())] += 1.0;
    f.predicted.push_back(current);
  }
  for (const auto& [g, rho] : density) {
    f.active.push_back({g, rho});
    f.rho_max = std::max(f.rho_max, rho);
  }
  return f;
}

double period_mean_rate(std::span<const Surface> surfaces,
                        std::span<const std::vector<Vec3>> positions_per_slot,
                        const RadioParams& params, std::uint64_t seed, std::uint64_t first_slot) {
  if (positions_per_slot.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t s = 0; s < positions_per_slot.size(); ++s) {
    const auto H = assemble_channel(surfaces, positions_per_slot[s], params, seed, first_slot + s);
    total += sinr_and_rate(H, params).sum_rate_bps;
  }
  return total / static_cast<double>(positions_per_slot.size());
}

}  // namespace sixdma
