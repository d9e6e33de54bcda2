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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/baselines.hpp"
#include "sixdma/graph.hpp"
#include "sixdma/optimizer.hpp"
#include "sixdma/scenario.hpp"

namespace sixdma {

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kMetricsHeader =
    "scheme,seed,K,tx_dbm,N,period,rate_bps,move_steps,time_steps,decision_ms";

struct RunKey {
  Scheme scheme = Scheme::kSingleStep;
  std::uint64_t seed = 1;
  int vehicles = 30;
  double tx_dbm = 23.0;
  int interval = 10;
};

struct PeriodRecord {
  int period = 0;
  double rate_bps = 0.0;
  int move_steps = 0;
  int time_steps = 0;
  double decision_ms = 0.0;
  int bound_move_steps = 0;  // identity-free optimal matching
  int bound_time_steps = 0;
};

struct AuditEntry {
  int period = 0;
  double omega = 0.0;
  bool skipped = false;
  std::vector<Move> moves;
  std::vector<ScoreBreakdown> scores;
  Deployment deployment;
  double rate_bps = 0.0;
};

struct RunResult {
  RunKey key;
  std::vector<PeriodRecord> periods;
  std::vector<AuditEntry> audit;

  double mean_rate() const;
  double mean_move_steps() const;
  double mean_time_steps() const;
  int max_move_steps() const;
  int max_time_steps() const;
};

/// Shared, read-only inputs of every run.
struct SimulationContext {
  SimulationContext(const ScenarioConfig& cfg, const ConfigSpace& space,
                    const CandidateLibrary& library);

  const ScenarioConfig* config;
  const ConfigSpace* space;
  const CandidateLibrary* library;
  DistanceTable table;
  double kappa;
};

/// Sweep points x schemes x seeds, in output order.
std::vector<RunKey> expand_runs(const ScenarioConfig& cfg);

/// Throws InvariantViolation if a deployment is infeasible or the single-step bound breaks.
RunResult run_simulation(const SimulationContext& ctx, const RunKey& key);

std::vector<RunResult> run_all(const SimulationContext& ctx, const std::vector<RunKey>& keys,
                               unsigned threads = 0);

void write_metrics_csv(std::ostream& out, const std::vector<RunResult>& results);
void write_summary_json(std::ostream& out, const std::vector<RunResult>& results,
                        const ScenarioConfig& cfg);
void write_audit_log(std::ostream& out, const std::vector<RunResult>& results);

/// Loads the cached library if its fingerprint matches, otherwise builds and saves it.
/// Returns the library and whether it came from the cache.
std::pair<CandidateLibrary, bool> obtain_library(const ScenarioConfig& cfg, const ConfigSpace& space,
                                                 const std::string& path);

CandidateLibrary build_library_for(const ScenarioConfig& cfg, const ConfigSpace& space);

}  // namespace sixdma
