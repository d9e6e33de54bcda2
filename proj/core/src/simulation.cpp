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

#include "sixdma/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "sixdma/parallel.hpp"

namespace sixdma {

namespace {

template <class F>
double mean_of(const std::vector<PeriodRecord>& v, F f) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (const auto& p : v) s += f(p);
  return s / static_cast<double>(v.size());
}

bool is_adaptive(Scheme s) { return s == Scheme::kSingleStep || s == Scheme::kFullReconfig; }

bool moves_physically(Scheme s) {
  return s == Scheme::kSingleStep || s == Scheme::kFullReconfig || s == Scheme::kCircular;
}

struct SchemeState {
  Deployment deployment;
  std::vector<Surface> surfaces;
  std::vector<Placement> placements;  // set for sector layouts
  int offset = 0;
  std::optional<AdaptiveReconfigurator> reconfigurator;
};

void adopt(SchemeState& st, SchemeLayout layout) {
  st.deployment = std::move(layout.deployment);
  st.surfaces = std::move(layout.surfaces);
  st.placements = std::move(layout.placements);
}

void check_feasible(const SimulationContext& ctx, const RunKey& key, const SchemeState& st, int period) {
  const auto report = st.placements.empty()
                          ? check_deployment(*ctx.space, st.deployment)
                          : check_placements(st.placements, ctx.space->params().d_min);
  if (!report.feasible()) {
    const auto& v = report.violations.front();
    throw InvariantViolation(fmt::format("{} seed {} period {}: infeasible deployment ({} between entries {} and {})",
                                         to_string(key.scheme), key.seed, period, to_string(v.kind),
                                         v.first, v.second));
  }
}

}  // namespace

double RunResult::mean_rate() const { return mean_of(periods, [](const auto& p) { return p.rate_bps; }); }
double RunResult::mean_move_steps() const { return mean_of(periods, [](const auto& p) { return double(p.move_steps); }); }
double RunResult::mean_time_steps() const { return mean_of(periods, [](const auto& p) { return double(p.time_steps); }); }

int RunResult::max_move_steps() const {
  int m = 0;
  for (const auto& p : periods) m = std::max(m, p.move_steps);
  return m;
}

int RunResult::max_time_steps() const {
  int m = 0;
  for (const auto& p : periods) m = std::max(m, p.time_steps);
  return m;
}

SimulationContext::SimulationContext(const ScenarioConfig& cfg, const ConfigSpace& sp,
                                     const CandidateLibrary& lib)
    : config(&cfg),
      space(&sp),
      library(&lib),
      table(PositionGraph(sp)),
      kappa(cfg.kappa ? *cfg.kappa : default_kappa(cfg.scenario.num_antennas, std::max(1, table.diameter()))) {
  if (lib.grid.count() != cfg.grid().count())
    throw std::invalid_argument("simulation: library grid does not match the scenario grid");
}

std::vector<RunKey> expand_runs(const ScenarioConfig& cfg) {
  const auto powers = cfg.sweep.tx_power_dbm.empty() ? std::vector<double>{cfg.tx_power_dbm}
                                                     : cfg.sweep.tx_power_dbm;
  const auto fleets = cfg.sweep.num_vehicles.empty() ? std::vector<int>{cfg.scenario.num_vehicles}
                                                     : cfg.sweep.num_vehicles;
  const auto intervals = cfg.sweep.update_interval.empty()
                             ? std::vector<int>{cfg.scenario.update_interval}
                             : cfg.sweep.update_interval;
  std::vector<RunKey> keys;
  for (int k : fleets)
    for (double p : powers)
      for (int n : intervals)
        for (Scheme s : cfg.schemes)
          for (auto seed : cfg.seeds) keys.push_back({s, seed, k, p, n});
  return keys;
}

RunResult run_simulation(const SimulationContext& ctx, const RunKey& key) {
  const auto& cfg = *ctx.config;
  const auto& space = *ctx.space;
  const auto grid = cfg.grid();
  const auto mob = cfg.mobility();
  const auto radio = cfg.radio_at(key.tx_dbm);
  const Vec3 bs = cfg.scenario.bs_position;
  const int U = cfg.scenario.num_antennas;
  const int T = cfg.scenario.num_slots;
  const int N = key.interval;
  const double dt = cfg.scenario.slot_duration_s;
  const bool audit = cfg.output.audit_log && is_adaptive(key.scheme);

  SchemeState st;
  switch (key.scheme) {
    case Scheme::kFpa: adopt(st, fpa_layout(space, bs, radio, U)); break;
    case Scheme::kCircular: adopt(st, circular_layout(space, 0, bs, radio, U)); break;
    case Scheme::kRotationOnly:
      adopt(st, rotation_only_layout(space, PeriodForecast{}, *ctx.library, bs, radio, U));
      break;
    case Scheme::kSingleStep:
    case Scheme::kFullReconfig:
      st.reconfigurator.emplace(space, *ctx.library, cfg.optimizer, U,
                                key.scheme == Scheme::kFullReconfig ? SearchScope::kFullSpace
                                                                    : SearchScope::kNeighborhood);
      st.deployment = st.reconfigurator->initial_deployment();
      st.surfaces = surfaces_from_deployment(space, st.deployment, bs, radio);
      break;
  }
  int elements = 0;
  for (const auto& s : st.surfaces) elements += s.elements();
  if (elements != U * radio.elements_per_surface)
    throw InvariantViolation(fmt::format("{}: {} receive elements, expected {}", to_string(key.scheme),
                                         elements, U * radio.elements_per_surface));
  check_feasible(ctx, key, st, 0);

  auto rng = substream(key.seed, StreamTag::kMobility, {static_cast<std::uint64_t>(key.vehicles)});
  FleetState fleet = spawn_fleet(key.vehicles, mob, rng);

  RunResult result;
  result.key = key;
  PeriodRecord current;
  AuditEntry entry;
  double rate_sum = 0.0;
  int rate_slots = 0;
  int period = 0;

  for (int t = 1; t <= T; ++t) {
    fleet = step_fleet(fleet, dt, mob, rng);

    if ((t - 1) % N == 0) {
      ++period;
      const auto start = std::chrono::steady_clock::now();
      const auto forecast = forecast_period(fleet, dt, N, grid, mob);
      const Deployment previous = st.deployment;
      PeriodDecision decision;
      switch (key.scheme) {
        case Scheme::kFpa: break;
        case Scheme::kCircular:
          st.offset = circular_best_offset(space, forecast, grid, bs, radio, U, st.offset);
          adopt(st, circular_layout(space, st.offset, bs, radio, U));
          break;
        case Scheme::kRotationOnly:
          adopt(st, rotation_only_layout(space, forecast, *ctx.library, bs, radio, U));
          break;
        case Scheme::kSingleStep:
        case Scheme::kFullReconfig:
          decision = st.reconfigurator->update(st.deployment, forecast);
          st.deployment = decision.deployment;
          st.surfaces = surfaces_from_deployment(space, st.deployment, bs, radio);
          break;
      }
      const auto stop = std::chrono::steady_clock::now();
      check_feasible(ctx, key, st, period);

      current = PeriodRecord{};
      current.period = period;
      if (cfg.output.record_timing)
        current.decision_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      if (moves_physically(key.scheme)) {
        const auto bound = plan_transition(ctx.table, previous, st.deployment, ctx.kappa, cfg.cost);
        current.bound_move_steps = bound.total_steps;
        current.bound_time_steps = bound.max_steps;
        current.move_steps = bound.total_steps;
        current.time_steps = bound.max_steps;
      }
      if (key.scheme == Scheme::kSingleStep) {
        for (const auto& m : decision.moves)
          if (ctx.table(m.from, m.to) > 1)
            throw InvariantViolation(fmt::format("single_step seed {} period {}: antenna {} moved {} hops",
                                                 key.seed, period, m.antenna, ctx.table(m.from, m.to)));
        // Antennas keep their identity, so execution is limited to one hop each.
        const auto plan = plan_transition_capped(ctx.table, previous, st.deployment, ctx.kappa, 1, cfg.cost);
        current.move_steps = plan.total_steps;
        current.time_steps = plan.max_steps;
      }
      if (audit) {
        entry = AuditEntry{};
        entry.period = period;
        entry.omega = decision.omega_used;
        entry.skipped = decision.skipped;
        entry.moves = std::move(decision.moves);
        entry.scores = std::move(decision.scores);
        entry.deployment = st.deployment;
      }
      rate_sum = 0.0;
      rate_slots = 0;
    }

    const auto users = fleet.positions();
    const auto H = assemble_channel(st.surfaces, users, radio, key.seed, static_cast<std::uint64_t>(t));
    rate_sum += sinr_and_rate(H, radio).sum_rate_bps;
    ++rate_slots;

    if (t % N == 0 || t == T) {
      current.rate_bps = rate_sum / rate_slots;
      if (st.reconfigurator) st.reconfigurator->record_period(st.deployment, current.rate_bps);
      result.periods.push_back(current);
      if (audit) {
        entry.rate_bps = current.rate_bps;
        result.audit.push_back(std::move(entry));
      }
    }
  }
  return result;
}

std::vector<RunResult> run_all(const SimulationContext& ctx, const std::vector<RunKey>& keys,
                               unsigned threads) {
  std::vector<RunResult> results(keys.size());
  parallel_for(static_cast<int>(keys.size()),
               [&](int i) { results[i] = run_simulation(ctx, keys[i]); }, threads);
  return results;
}

void write_metrics_csv(std::ostream& out, const std::vector<RunResult>& results) {
  out << kMetricsHeader << '\n';
  for (const auto& r : results)
    for (const auto& p : r.periods)
      out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", to_string(r.key.scheme), r.key.seed,
                         r.key.vehicles, r.key.tx_dbm, r.key.interval, p.period, p.rate_bps,
                         p.move_steps, p.time_steps, p.decision_ms);
}

void write_summary_json(std::ostream& out, const std::vector<RunResult>& results,
                        const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["config_hash"] = fmt::format("{:016x}", fnv1a(to_json(cfg).dump()));
  j["num_slots"] = cfg.scenario.num_slots;
  auto runs = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    int zero_time = 0;
    int bound_max = 0;
    double decision = 0.0;
    double bound_move = 0.0;
    for (const auto& p : r.periods) {
      if (p.time_steps == 0) ++zero_time;
      decision += p.decision_ms;
      bound_move += p.bound_move_steps;
      bound_max = std::max(bound_max, p.bound_time_steps);
    }
    if (!r.periods.empty()) bound_move /= static_cast<double>(r.periods.size());
    runs.push_back({{"scheme", to_string(r.key.scheme)},
                    {"seed", r.key.seed},
                    {"K", r.key.vehicles},
                    {"tx_dbm", r.key.tx_dbm},
                    {"N", r.key.interval},
                    {"periods", r.periods.size()},
                    {"mean_rate_bps", r.mean_rate()},
                    {"mean_move_steps", r.mean_move_steps()},
                    {"max_move_steps", r.max_move_steps()},
                    {"mean_time_steps", r.mean_time_steps()},
                    {"max_time_steps", r.max_time_steps()},
                    {"zero_time_periods", zero_time},
                    {"mean_bound_move_steps", bound_move},
                    {"max_bound_time_steps", bound_max},
                    {"total_decision_ms", decision}});
  }
  j["runs"] = std::move(runs);
  out << j.dump(2) << '\n';
}

void write_audit_log(std::ostream& out, const std::vector<RunResult>& results) {
  for (const auto& r : results) {
    for (const auto& a : r.audit) {
      nlohmann::ordered_json j;
      j["scheme"] = to_string(r.key.scheme);
      j["seed"] = r.key.seed;
      j["K"] = r.key.vehicles;
      j["tx_dbm"] = r.key.tx_dbm;
      j["N"] = r.key.interval;
      j["period"] = a.period;
      j["omega"] = a.omega;
      j["skipped"] = a.skipped;
      j["rate_bps"] = a.rate_bps;
      auto moves = nlohmann::ordered_json::array();
      for (const auto& m : a.moves) moves.push_back({m.antenna, m.from, m.to, m.steps});
      j["moves"] = std::move(moves);
      auto dep = nlohmann::ordered_json::array();
      for (const auto& e : a.deployment.entries) dep.push_back({e.position, e.orientation});
      j["deployment"] = std::move(dep);
      auto scores = nlohmann::ordered_json::array();
      for (const auto& s : a.scores) scores.push_back({s.position, s.prior, s.history, s.stability, s.total});
      j["scores"] = std::move(scores);
      out << j.dump() << '\n';
    }
  }
}

CandidateLibrary build_library_for(const ScenarioConfig& cfg, const ConfigSpace& space) {
  return build_library(space, cfg.grid(), cfg.scenario.bs_position, cfg.radio_at(cfg.library.tx_power_dbm),
                       cfg.library.hyper, cfg.library.seed, library_fingerprint(cfg));
}

std::pair<CandidateLibrary, bool> obtain_library(const ScenarioConfig& cfg, const ConfigSpace& space,
                                                 const std::string& path) {
  const auto fp = library_fingerprint(cfg);
  if (!path.empty() && std::filesystem::exists(path)) {
    auto lib = load_library(path);
    if (lib.fingerprint == fp) return {std::move(lib), true};
  }
  auto lib = build_library_for(cfg, space);
  if (!path.empty()) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    save_library(path, lib);
  }
  return {std::move(lib), false};
}

}  // namespace sixdma
