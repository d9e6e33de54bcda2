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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sixdma/report.hpp"
#include "sixdma/simulation.hpp"

namespace fs = std::filesystem;
using namespace sixdma;

namespace {

ScenarioConfig config_from(const std::string& path) {
  if (path.empty()) {
    ScenarioConfig cfg;
    cfg.validate();
    return cfg;
  }
  return load_config(path);
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", p.string()));
  return out;
}

int cmd_run(const std::string& config_path, const std::vector<std::uint64_t>& seeds,
            const std::string& out_dir, const std::string& schemes,
            const std::vector<std::string>& sweeps, std::string library_path, unsigned threads) {
  auto cfg = config_from(config_path);
  if (!seeds.empty()) cfg.seeds = seeds;
  if (!schemes.empty()) {
    cfg.schemes.clear();
    std::stringstream ss(schemes);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty()) cfg.schemes.push_back(parse_scheme(s));
  }
  for (const auto& s : sweeps) apply_sweep_override(cfg, s);
  cfg.validate();

  const auto space = build_config_space(cfg.geometry);
  if (library_path.empty()) library_path = (fs::path(out_dir) / "library.json").string();
  auto [library, cached] = obtain_library(cfg, space, library_path);
  std::cerr << fmt::format("library {} ({})\n", library_path, cached ? "cached" : "built");

  const SimulationContext ctx(cfg, space, library);
  const auto keys = expand_runs(cfg);
  std::cerr << fmt::format("running {} simulations of {} slots\n", keys.size(), cfg.scenario.num_slots);
  const auto results = run_all(ctx, keys, threads);

  const fs::path dir(out_dir);
  {
    auto out = open_out(dir / "metrics.csv");
    write_metrics_csv(out, results);
  }
  {
    auto out = open_out(dir / "summary.json");
    write_summary_json(out, results, cfg);
  }
  if (cfg.output.audit_log) {
    auto out = open_out(dir / "audit.jsonl");
    write_audit_log(out, results);
  }
  for (const auto& r : results)
    std::cout << fmt::format("{:<14} seed={:<4} K={:<3} tx={:<5} N={:<3} rate={:.4e} move={:.3f} time={:.3f}\n",
                             to_string(r.key.scheme), r.key.seed, r.key.vehicles, r.key.tx_dbm,
                             r.key.interval, r.mean_rate(), r.mean_move_steps(), r.mean_time_steps());
  return 0;
}

int cmd_build_library(const std::string& config_path, const std::string& out_path) {
  const auto cfg = config_from(config_path);
  const auto space = build_config_space(cfg.geometry);
  auto [library, cached] = obtain_library(cfg, space, out_path);
  std::cout << fmt::format("{} {} grids, {} evaluations, fingerprint {} ({})\n", out_path,
                           library.grid.count(), library.evaluations, library.fingerprint,
                           cached ? "cached" : "built");
  return 0;
}

int cmd_cost_report(const std::string& metrics_path, std::string out_path) {
  std::ifstream in(metrics_path);
  if (!in) throw std::runtime_error(fmt::format("cannot open metrics file {}", metrics_path));
  const auto rows = cost_report(in);
  if (out_path.empty()) out_path = (fs::path(metrics_path).parent_path() / "cost_report.csv").string();
  {
    auto out = open_out(out_path);
    write_cost_report(out, rows);
  }
  write_cost_report(std::cout, rows);
  return 0;
}

int cmd_export_heatmap(const std::string& config_path, const std::string& library_path,
                       const std::string& out_path) {
  const auto cfg = config_from(config_path);
  const auto space = build_config_space(cfg.geometry);
  auto [library, cached] = obtain_library(cfg, space, library_path);
  auto out = open_out(out_path);
  write_heatmap(out, library);
  std::cout << fmt::format("{} ({} grids)\n", out_path, library.grid.count());
  return 0;
}

int cmd_export_catalog(const std::string& config_path, const std::string& out_path) {
  const auto cfg = config_from(config_path);
  const auto space = build_config_space(cfg.geometry);
  auto out = open_out(out_path);
  write_catalog(out, space);
  std::cout << fmt::format("{} ({} positions)\n", out_path, space.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sixdma: 6DMA reconfiguration simulator"};
  app.require_subcommand(1);

  std::string config, out_dir = "out", schemes, library, out, metrics;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> sweeps;
  unsigned threads = 0;

  auto* run = app.add_subcommand("run", "Simulate every sweep point, scheme and seed");
  run->add_option("--config", config, "Scenario config (JSON)");
  run->add_option("--seed", seeds, "Seed(s), replaces the config list");
  run->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  run->add_option("--scheme", schemes, "Comma-separated scheme list");
  run->add_option("--sweep", sweeps, "Sweep override key=v1,v2 (repeatable)");
  run->add_option("--library", library, "Candidate library cache (default <out-dir>/library.json)");
  run->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* lib = app.add_subcommand("build-library", "Build or refresh the candidate library");
  lib->add_option("--config", config, "Scenario config (JSON)");
  std::string lib_out = "library.json";
  lib->add_option("--out", lib_out, "Library file")->capture_default_str();

  auto* cost = app.add_subcommand("cost-report", "Movement and time cost summary per scheme and N");
  cost->add_option("--metrics", metrics, "metrics.csv from `run`")->required();
  cost->add_option("--out", out, "Output CSV (default next to the metrics file)");

  auto* heat = app.add_subcommand("export-heatmap", "Best library rate per grid");
  heat->add_option("--config", config, "Scenario config (JSON)");
  std::string heat_lib = "library.json", heat_out = "heatmap.csv";
  heat->add_option("--library", heat_lib, "Library file")->capture_default_str();
  heat->add_option("--out", heat_out, "Output CSV")->capture_default_str();

  auto* cat = app.add_subcommand("export-catalog", "Position and orientation catalog (JSON lines)");
  cat->add_option("--config", config, "Scenario config (JSON)");
  std::string cat_out = "catalog.jsonl";
  cat->add_option("--out", cat_out, "Output file")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config, seeds, out_dir, schemes, sweeps, library, threads);
    if (*lib) return cmd_build_library(config, lib_out);
    if (*cost) return cmd_cost_report(metrics, out);
    if (*heat) return cmd_export_heatmap(config, heat_lib, heat_out);
    if (*cat) return cmd_export_catalog(config, cat_out);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
