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
#include <map>
#include <span>
#include <vector>

#include "sixdma/geometry.hpp"
#include "sixdma/graph.hpp"
#include "sixdma/mobility.hpp"
#include "sixdma/profiler.hpp"

namespace sixdma {

struct ScoreWeights {
  double omega = 0.5;    // history weight
  double beta0 = 1.0;    // hit reward
  double beta1 = 0.5;    // multi-rotation reward
  double mu = 0.05;      // stability reward
  int warmup_periods = 3;

  void validate() const;
};

struct HistoryRecord {
  std::vector<int> positions;
  double rate = 0.0;
};

class HistoryLibrary {
 public:
  void record(std::span<const int> positions, double rate);

  int periods() const noexcept { return static_cast<int>(records_.size()); }
  const std::vector<HistoryRecord>& records() const noexcept { return records_; }
  int count(int position) const;
  double global_mean() const;
  double peak() const noexcept { return peak_; }
  /// Mean rate over periods that activated `position`; the global mean otherwise.
  double mean_rate(int position) const;
  /// mean_rate / peak, or 0 with no history.
  double normalized_score(int position) const;

 private:
  struct Tally {
    int count = 0;
    double rate_sum = 0.0;
  };
  std::vector<HistoryRecord> records_;
  std::map<int, Tally> tallies_;
  double rate_sum_ = 0.0;
  double peak_ = 0.0;
};

struct ScoreBreakdown {
  int position = 0;
  double prior = 0.0;
  double history = 0.0;
  double stability = 0.0;
  double total = 0.0;
};

/// S_pre for every catalog position (zero for positions never hit).
std::vector<double> prior_scores(int positions, const PeriodForecast& forecast,
                                 const CandidateLibrary& library, const ScoreWeights& weights);

ScoreBreakdown composite_score(int position, const PeriodForecast& forecast,
                               const CandidateLibrary& library, const HistoryLibrary& history,
                               const ScoreWeights& weights, double omega_curr,
                               std::span<const int> incumbents);

std::vector<ScoreBreakdown> score_positions(std::span<const int> candidates,
                                            std::span<const double> prior,
                                            const HistoryLibrary& history,
                                            const ScoreWeights& weights, double omega_curr,
                                            std::span<const int> incumbents);

/// Occurrence-count argmax over active grids; ties go to the lower index, no hits to radial (0).
int choose_rotation(const ConfigSpace& space, int position, const PeriodForecast& forecast,
                    const CandidateLibrary& library);

struct Move {
  int antenna = 0;
  int from = 0;
  int to = 0;
  int steps = 0;
};

struct PeriodDecision {
  Deployment deployment;
  std::vector<Move> moves;
  std::vector<ScoreBreakdown> scores;
  double omega_used = 0.0;
  bool skipped = false;  // no active grids, deployment kept
};

/// Conflict-aware greedy over (antenna, neighbor) pairs.
/// `score` and `orientation` are indexed by catalog position; orientation -1 selects radial.
PeriodDecision assign_positions(const ConfigSpace& space, const Deployment& current,
                                std::span<const double> score, std::span<const int> orientation);

enum class SearchScope { kNeighborhood, kFullSpace };

/// Algorithm state shared by the single-step scheme and the full-space baseline.
class AdaptiveReconfigurator {
 public:
  AdaptiveReconfigurator(const ConfigSpace& space, const CandidateLibrary& library,
                         ScoreWeights weights, int antennas,
                         SearchScope scope = SearchScope::kNeighborhood);

  /// Top-U positions by summed library rate, radial orientation.
  Deployment initial_deployment() const;

  PeriodDecision update(const Deployment& current, const PeriodForecast& forecast);
  void record_period(const Deployment& deployment, double rate);

  const HistoryLibrary& history() const noexcept { return history_; }
  int periods_started() const noexcept { return period_; }
  SearchScope scope() const noexcept { return scope_; }

 private:
  PeriodDecision select_full_space(const Deployment& current, std::span<const double> score,
                                   std::span<const int> orientation) const;

  const ConfigSpace* space_;
  const CandidateLibrary* library_;
  DistanceTable table_;
  ScoreWeights weights_;
  int antennas_;
  SearchScope scope_;
  HistoryLibrary history_;
  int period_ = 0;
};

/// Entries of `to` reordered so antenna u of `from` maps to its optimal-assignment target.
Deployment align_to_previous(const DistanceTable& table, const Deployment& from,
                             const Deployment& to);

}  // namespace sixdma
