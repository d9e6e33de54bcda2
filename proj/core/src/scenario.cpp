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

#include "sixdma/scenario.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace sixdma {

using ojson = nlohmann::ordered_json;

GridSpec ScenarioConfig::grid() const {
  return {scenario.area_x, scenario.area_y, scenario.grid_width, scenario.z_veh};
}

MobilityParams ScenarioConfig::mobility() const {
  return {scenario.area_x,     scenario.area_y,    scenario.lane_offset, scenario.z_veh,
          scenario.speed_mean, scenario.speed_std, scenario.speed_min,   scenario.speed_max};
}

RadioParams ScenarioConfig::radio_at(double tx_dbm) const {
  RadioParams r = radio;
  r.tx_power_w = dbm_to_watt(tx_dbm);
  r.noise_power_w = thermal_noise_watt(r.bandwidth_hz, noise_figure_db, noise_psd_dbm_hz);
  return r;
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  try {
    geometry.validate();
    radio_at(tx_power_dbm).validate();
    grid().validate();
    mobility().validate();
    library.hyper.validate();
    optimizer.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const auto& s = scenario;
  if (s.num_antennas < 1) fail("scenario.num_antennas must be >= 1");
  if (s.num_vehicles < 0) fail("scenario.num_vehicles must be >= 0");
  if (!(s.slot_duration_s > 0)) fail("scenario.slot_duration_s must be positive");
  if (s.num_slots < 1) fail("scenario.num_slots must be >= 1");
  if (s.update_interval < 1) fail("scenario.update_interval must be >= 1");
  if (!(cost.unit_energy >= 0 && cost.unit_step_time >= 0)) fail("cost scales must be >= 0");
  if (kappa && !(*kappa >= 0)) fail("cost.kappa must be >= 0");
  for (int k : sweep.num_vehicles)
    if (k < 0) fail("sweep.num_vehicles entries must be >= 0");
  for (int n : sweep.update_interval)
    if (n < 1) fail("sweep.update_interval entries must be >= 1");
  if (schemes.empty()) fail("schemes must not be empty");
  if (seeds.empty()) fail("seeds must not be empty");
}

ojson to_json(const ScenarioConfig& c) {
  ojson j;
  j["geometry"] = {{"r0", c.geometry.r0}, {"d_min", c.geometry.d_min}, {"meridians", c.geometry.meridians}};
  const auto& r = c.radio;
  j["radio"] = {{"carrier_freq_hz", r.carrier_freq_hz},
                {"bandwidth_hz", r.bandwidth_hz},
                {"tx_power_dbm", c.tx_power_dbm},
                {"noise_figure_db", c.noise_figure_db},
                {"noise_psd_dbm_hz", c.noise_psd_dbm_hz},
                {"g_max_dbi", r.g_max_dbi},
                {"phi_3db_deg", r.phi_3db_deg},
                {"theta_3db_deg", r.theta_3db_deg},
                {"a_m_db", r.a_m_db},
                {"d1", r.d1},
                {"d2", r.d2},
                {"sigma_sf_db", r.sigma_sf_db},
                {"elements_per_surface", r.elements_per_surface},
                {"element_spacing_m", r.element_spacing_m},
                {"epsilon", r.epsilon},
                {"n_nlos_paths", r.n_nlos_paths}};
  const auto& s = c.scenario;
  j["scenario"] = {{"area_x", s.area_x},
                   {"area_y", s.area_y},
                   {"grid_width", s.grid_width},
                   {"bs_position", {s.bs_position.x(), s.bs_position.y(), s.bs_position.z()}},
                   {"z_veh", s.z_veh},
                   {"num_antennas", s.num_antennas},
                   {"num_vehicles", s.num_vehicles},
                   {"lane_offset", s.lane_offset},
                   {"speed_mean", s.speed_mean},
                   {"speed_std", s.speed_std},
                   {"speed_min", s.speed_min},
                   {"speed_max", s.speed_max},
                   {"slot_duration_s", s.slot_duration_s},
                   {"num_slots", s.num_slots},
                   {"update_interval", s.update_interval}};
  j["cost"] = {{"unit_energy", c.cost.unit_energy}, {"unit_step_time", c.cost.unit_step_time}};
  j["cost"]["kappa"] = c.kappa ? ojson(*c.kappa) : ojson(nullptr);
  j["library"] = {{"anchors", c.library.hyper.anchors}, {"seeds", c.library.hyper.seeds},
                  {"top_h", c.library.hyper.top_h},     {"samples", c.library.hyper.samples},
                  {"seed", c.library.seed},             {"tx_power_dbm", c.library.tx_power_dbm}};
  j["optimizer"] = {{"omega", c.optimizer.omega}, {"beta0", c.optimizer.beta0},
                    {"beta1", c.optimizer.beta1}, {"mu", c.optimizer.mu},
                    {"warmup_periods", c.optimizer.warmup_periods}};
  j["sweep"] = {{"tx_power_dbm", c.sweep.tx_power_dbm},
                {"num_vehicles", c.sweep.num_vehicles},
                {"update_interval", c.sweep.update_interval}};
  auto schemes = ojson::array();
  for (Scheme sc : c.schemes) schemes.push_back(to_string(sc));
  j["schemes"] = std::move(schemes);
  j["seeds"] = c.seeds;
  j["output"] = {{"record_timing", c.output.record_timing}, {"audit_log", c.output.audit_log}};
  return j;
}

namespace {

void overlay(ojson& base, const ojson& user, const std::string& path) {
  for (auto it = user.begin(); it != user.end(); ++it) {
    const std::string key = path.empty() ? it.key() : path + "." + it.key();
    if (!base.contains(it.key())) throw ConfigError(fmt::format("unknown config key '{}'", key));
    auto& slot = base[it.key()];
    if (slot.is_object()) {
      if (!it.value().is_object()) throw ConfigError(fmt::format("config key '{}' must be an object", key));
      overlay(slot, it.value(), key);
    } else {
      slot = it.value();
    }
  }
}

template <class T>
T field(const ojson& j, const char* section, const char* key) {
  try {
    return j.at(section).at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(fmt::format("config key '{}.{}' has the wrong type", section, key));
  }
}

}  // namespace

ScenarioConfig parse_config(const nlohmann::json& user_json) {
  if (!user_json.is_object()) throw ConfigError("config root must be an object");
  ScenarioConfig c;
  ojson j = to_json(c);
  overlay(j, ojson::parse(user_json.dump()), "");

  c.geometry = {field<double>(j, "geometry", "r0"), field<double>(j, "geometry", "d_min"),
                field<int>(j, "geometry", "meridians")};

  auto& r = c.radio;
  r.carrier_freq_hz = field<double>(j, "radio", "carrier_freq_hz");
  r.bandwidth_hz = field<double>(j, "radio", "bandwidth_hz");
  c.tx_power_dbm = field<double>(j, "radio", "tx_power_dbm");
  c.noise_figure_db = field<double>(j, "radio", "noise_figure_db");
  c.noise_psd_dbm_hz = field<double>(j, "radio", "noise_psd_dbm_hz");
  r.g_max_dbi = field<double>(j, "radio", "g_max_dbi");
  r.phi_3db_deg = field<double>(j, "radio", "phi_3db_deg");
  r.theta_3db_deg = field<double>(j, "radio", "theta_3db_deg");
  r.a_m_db = field<double>(j, "radio", "a_m_db");
  r.d1 = field<double>(j, "radio", "d1");
  r.d2 = field<double>(j, "radio", "d2");
  r.sigma_sf_db = field<double>(j, "radio", "sigma_sf_db");
  r.elements_per_surface = field<int>(j, "radio", "elements_per_surface");
  r.element_spacing_m = field<double>(j, "radio", "element_spacing_m");
  r.epsilon = field<double>(j, "radio", "epsilon");
  r.n_nlos_paths = field<int>(j, "radio", "n_nlos_paths");
  r = c.radio_at(c.tx_power_dbm);

  auto& s = c.scenario;
  s.area_x = field<double>(j, "scenario", "area_x");
  s.area_y = field<double>(j, "scenario", "area_y");
  s.grid_width = field<double>(j, "scenario", "grid_width");
  const auto bs = field<std::vector<double>>(j, "scenario", "bs_position");
  if (bs.size() != 3) throw ConfigError("config key 'scenario.bs_position' needs three coordinates");
  s.bs_position = {bs[0], bs[1], bs[2]};
  s.z_veh = field<double>(j, "scenario", "z_veh");
  s.num_antennas = field<int>(j, "scenario", "num_antennas");
  s.num_vehicles = field<int>(j, "scenario", "num_vehicles");
  s.lane_offset = field<double>(j, "scenario", "lane_offset");
  s.speed_mean = field<double>(j, "scenario", "speed_mean");
  s.speed_std = field<double>(j, "scenario", "speed_std");
  s.speed_min = field<double>(j, "scenario", "speed_min");
  s.speed_max = field<double>(j, "scenario", "speed_max");
  s.slot_duration_s = field<double>(j, "scenario", "slot_duration_s");
  s.num_slots = field<int>(j, "scenario", "num_slots");
  s.update_interval = field<int>(j, "scenario", "update_interval");

  c.cost.unit_energy = field<double>(j, "cost", "unit_energy");
  c.cost.unit_step_time = field<double>(j, "cost", "unit_step_time");
  if (j["cost"]["kappa"].is_null())
    c.kappa.reset();
  else
    c.kappa = field<double>(j, "cost", "kappa");

  c.library.hyper = {field<int>(j, "library", "anchors"), field<int>(j, "library", "seeds"),
                     field<int>(j, "library", "top_h"), field<int>(j, "library", "samples")};
  c.library.seed = field<std::uint64_t>(j, "library", "seed");
  c.library.tx_power_dbm = field<double>(j, "library", "tx_power_dbm");

  c.optimizer = {field<double>(j, "optimizer", "omega"), field<double>(j, "optimizer", "beta0"),
                 field<double>(j, "optimizer", "beta1"), field<double>(j, "optimizer", "mu"),
                 field<int>(j, "optimizer", "warmup_periods")};

  c.sweep.tx_power_dbm = field<std::vector<double>>(j, "sweep", "tx_power_dbm");
  c.sweep.num_vehicles = field<std::vector<int>>(j, "sweep", "num_vehicles");
  c.sweep.update_interval = field<std::vector<int>>(j, "sweep", "update_interval");

  try {
    c.schemes.clear();
    for (const auto& name : j.at("schemes")) c.schemes.push_back(parse_scheme(name.get<std::string>()));
    c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config keys 'schemes' and 'seeds' must be a list of names and a list of integers");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  c.output.record_timing = field<bool>(j, "output", "record_timing");
  c.output.audit_log = field<bool>(j, "output", "audit_log");
  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file {}", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
  return parse_config(j);
}

void apply_sweep_override(ScenarioConfig& cfg, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError(fmt::format("sweep override '{}' needs key=v1,v2", spec));
  const std::string key = spec.substr(0, eq);
  std::vector<std::string> values;
  std::stringstream ss(spec.substr(eq + 1));
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) values.push_back(v);
  if (values.empty()) throw ConfigError(fmt::format("sweep override '{}' has no values", spec));
  try {
    if (key == "tx_power_dbm") {
      cfg.sweep.tx_power_dbm.clear();
      for (const auto& v : values) cfg.sweep.tx_power_dbm.push_back(std::stod(v));
    } else if (key == "num_vehicles") {
      cfg.sweep.num_vehicles.clear();
      for (const auto& v : values) cfg.sweep.num_vehicles.push_back(std::stoi(v));
    } else if (key == "update_interval") {
      cfg.sweep.update_interval.clear();
      for (const auto& v : values) cfg.sweep.update_interval.push_back(std::stoi(v));
    } else {
      throw ConfigError(fmt::format(
          "unknown sweep axis '{}' (expected tx_power_dbm, num_vehicles or update_interval)", key));
    }
  } catch (const std::logic_error&) {
    throw ConfigError(fmt::format("sweep override '{}' has a non-numeric value", spec));
  }
  cfg.validate();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string library_fingerprint(const ScenarioConfig& cfg) {
  const auto j = to_json(cfg);
  ojson key;
  key["format"] = kLibraryFormatVersion;
  key["geometry"] = j["geometry"];
  key["radio"] = j["radio"];
  key["radio"].erase("tx_power_dbm");
  key["grid"] = {{"area_x", cfg.scenario.area_x}, {"area_y", cfg.scenario.area_y},
                 {"grid_width", cfg.scenario.grid_width}, {"z_veh", cfg.scenario.z_veh}};
  key["bs_position"] = j["scenario"]["bs_position"];
  key["library"] = j["library"];
  return fmt::format("{:016x}", fnv1a(key.dump()));
}

}  // namespace sixdma
