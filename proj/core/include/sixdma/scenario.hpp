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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sixdma/baselines.hpp"
#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/grid.hpp"
#include "sixdma/mobility.hpp"
#include "sixdma/optimizer.hpp"
#include "sixdma/profiler.hpp"
#include "sixdma/reconfig_cost.hpp"

namespace sixdma {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioParams {
  double area_x = 300.0;
  double area_y = 300.0;
  double grid_width = 15.0;
  Vec3 bs_position{150.0, 150.0, 10.0};
  double z_veh = 1.5;
  int num_antennas = 16;
  int num_vehicles = 30;
  double lane_offset = 3.5;
  double speed_mean = 15.0;
  double speed_std = 3.0;
  double speed_min = 10.0;
  double speed_max = 20.0;
  double slot_duration_s = 0.1;
  int num_slots = 1000;
  int update_interval = 10;
};

struct LibrarySettings {
  LibraryHyper hyper;
  std::uint64_t seed = 7;
  double tx_power_dbm = 23.0;
};

struct SweepAxes {
  std::vector<double> tx_power_dbm;
  std::vector<int> num_vehicles;
  std::vector<int> update_interval;
};

struct OutputSettings {
  bool record_timing = false;  // wall-clock decision time; breaks byte-identical output
  bool audit_log = true;
};

struct ScenarioConfig {
  GeometryParams geometry{0.5, 0.1, 12};
  RadioParams radio;
  double tx_power_dbm = 23.0;
  double noise_figure_db = 7.0;
  double noise_psd_dbm_hz = -174.0;
  ScenarioParams scenario;
  CostScales cost;
  std::optional<double> kappa;  // default_kappa when unset
  LibrarySettings library;
  ScoreWeights optimizer;
  SweepAxes sweep;
  std::vector<Scheme> schemes{all_schemes().begin(), all_schemes().end()};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  OutputSettings output;

  GridSpec grid() const;
  MobilityParams mobility() const;
  /// Radio parameters with the transmit power and noise power resolved.
  RadioParams radio_at(double tx_dbm) const;
  void validate() const;
};

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);
nlohmann::ordered_json to_json(const ScenarioConfig& cfg);

/// Applies `key=v1,v2,...` to the sweep axes (tx_power_dbm, num_vehicles, update_interval).
void apply_sweep_override(ScenarioConfig& cfg, const std::string& spec);

/// Hex FNV-1a digest of everything the candidate library depends on.
std::string library_fingerprint(const ScenarioConfig& cfg);

std::uint64_t fnv1a(std::string_view data);

}  // namespace sixdma
