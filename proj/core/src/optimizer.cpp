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

#include "sixdma/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "sixdma/reconfig_cost.hpp"

namespace sixdma {

void ScoreWeights::validate() const {
  if (!(omega >= 0.0 && omega <= 1.0)) throw std::invalid_argument("optimizer: omega must lie in [0, 1]");
  if (!(beta1 > 0.0)) throw std::invalid_argument("optimizer: beta1 must be positive");
  if (!(mu >= 0.0)) throw std::invalid_argument("optimizer: mu must be non-negative");
  if (warmup_periods < 0) throw std::invalid_argument("optimizer: warmup_periods must be >= 0");
}

void HistoryLibrary::record(std::span<const int> positions, double rate) {
  records_.push_back({{positions.begin(), positions.end()}, rate});
  for (int i : positions) {
    auto& t = tallies_[i];
    ++t.count;
    t.rate_sum += rate;
  }
  rate_sum_ += rate;
  peak_ = records_.size() == 1 ? rate : std::max(peak_, rate);
}

int HistoryLibrary::count(int position) const {
  const auto it = tallies_.find(position);
  return it == tallies_.end() ? 0 : it->second.count;
}

double HistoryLibrary::global_mean() const {
  return records_.empty() ? 0.0 : rate_sum_ / static_cast<double>(records_.size());
}

double HistoryLibrary::mean_rate(int position) const {
  const auto it = tallies_.find(position);
  if (it == tallies_.end() || it->second.count == 0) return global_mean();
  return it->second.rate_sum / it->second.count;
}

double HistoryLibrary::normalized_score(int position) const {
  if (records_.empty() || peak_ <= 0.0) return 0.0;
  return mean_rate(position) / peak_;
}

namespace {

// Position -> number of distinct orientations among one grid's candidates.
std::vector<std::pair<int, int>> rotation_multiplicity(const std::vector<Candidate>& cands) {
  std::vector<std::pair<int, int>> pj;
  pj.reserve(cands.size());
  for (const auto& c : cands) pj.emplace_back(c.position, c.orientation);
  std::sort(pj.begin(), pj.end());
  pj.erase(std::unique(pj.begin(), pj.end()), pj.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& [pos, orient] : pj) {
    if (!out.empty() && out.back().first == pos)
      ++out.back().second;
    else
      out.emplace_back(pos, 1);
  }
  return out;
}

bool contains(std::span<const int> v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Placement placement_of(const ConfigSpace& space, int pos, int orient) {
  return {space.position(pos), space.orientation(pos, orient)};
}

}  // namespace

std::vector<double> prior_scores(int positions, const PeriodForecast& forecast,
                                 const CandidateLibrary& library, const ScoreWeights& weights) {
  std::vector<double> out(static_cast<std::size_t>(positions), 0.0);
  if (forecast.empty() || forecast.rho_max <= 0.0) return out;
  for (const auto& a : forecast.active) {
    const double w = a.rho / forecast.rho_max;
    for (const auto& [pos, nu] : rotation_multiplicity(library.candidates(a.grid))) {
      if (pos < 0 || pos >= positions)
        throw std::out_of_range(fmt::format("library references position {} outside the catalog", pos));
      out[pos] += w * (weights.beta0 + weights.beta1 * (nu - 1));
    }
  }
  return out;
}

std::vector<ScoreBreakdown> score_positions(std::span<const int> candidates,
                                            std::span<const double> prior,
                                            const HistoryLibrary& history,
                                            const ScoreWeights& weights, double omega_curr,
                                            std::span<const int> incumbents) {
  std::vector<ScoreBreakdown> out;
  out.reserve(candidates.size());
  for (int i : candidates) {
    ScoreBreakdown s;
    s.position = i;
    s.prior = prior[i];
    s.history = history.normalized_score(i);
    s.stability = contains(incumbents, i) ? weights.mu : 0.0;
    s.total = (1.0 - omega_curr) * s.prior + omega_curr * s.history + s.stability;
    out.push_back(s);
  }
  return out;
}

ScoreBreakdown composite_score(int position, const PeriodForecast& forecast,
                               const CandidateLibrary& library, const HistoryLibrary& history,
                               const ScoreWeights& weights, double omega_curr,
                               std::span<const int> incumbents) {
  int max_pos = position;
  for (const auto& grid : library.per_grid)
    for (const auto& c : grid) max_pos = std::max(max_pos, c.position);
  const auto prior = prior_scores(max_pos + 1, forecast, library, weights);
  const int cand[] = {position};
  return score_positions(cand, prior, history, weights, omega_curr, incumbents).front();
}

int choose_rotation(const ConfigSpace& space, int position, const PeriodForecast& forecast,
                    const CandidateLibrary& library) {
  std::vector<int> m(static_cast<std::size_t>(space.orientation_count(position)), 0);
  for (const auto& a : forecast.active) {
    std::vector<int> seen;
    for (const auto& c : library.candidates(a.grid)) {
      if (c.position != position || c.orientation < 0 ||
          c.orientation >= static_cast<int>(m.size()) || contains(seen, c.orientation))
        continue;
      seen.push_back(c.orientation);
      ++m[c.orientation];
    }
  }
  int best = 0;
  for (int j = 1; j < static_cast<int>(m.size()); ++j)
    if (m[j] > m[best]) best = j;
  return m[best] > 0 ? best : 0;
}

PeriodDecision assign_positions(const ConfigSpace& space, const Deployment& current,
                                std::span<const double> score, std::span<const int> orientation) {
  const int U = current.size();
  const double d_min = space.params().d_min;
  struct Pair {
    double score;
    int antenna;
    int position;
  };
  std::vector<Pair> pairs;
  for (int u = 0; u < U; ++u)
    for (int i : closed_neighborhood(space, current.entries[u].position))
      pairs.push_back({score[i], u, i});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.antenna != b.antenna) return a.antenna < b.antenna;
    return a.position < b.position;
  });

  std::vector<int> target(U, -1);
  std::vector<SurfaceConfig> chosen(U);
  std::vector<int> claimed;

  // Fixed antennas plus radial placeholders for the still-unassigned ones (except `skip`).
  auto context = [&](int skip) {
    std::vector<Placement> out;
    for (int v = 0; v < U; ++v) {
      if (v == skip) continue;
      if (target[v] >= 0)
        out.push_back(placement_of(space, chosen[v].position, chosen[v].orientation));
      else
        out.push_back(placement_of(space, current.entries[v].position, 0));
    }
    return out;
  };
  auto try_place = [&](int u, int pos) -> bool {
    const auto ctx = context(u);
    const int pref = orientation[pos] < 0 ? 0 : orientation[pos];
    for (int j : {pref, 0}) {
      if (placement_compatible(placement_of(space, pos, j), ctx, d_min)) {
        target[u] = pos;
        chosen[u] = {pos, j};
        claimed.push_back(pos);
        return true;
      }
      if (pref == 0) break;
    }
    return false;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& p : pairs) {
      if (target[p.antenna] >= 0 || contains(claimed, p.position)) continue;
      bool held = false;  // another antenna's current spot is released only once it is assigned
      for (int v = 0; v < U; ++v)
        if (v != p.antenna && target[v] < 0 && current.entries[v].position == p.position) held = true;
      if (held) continue;
      if (try_place(p.antenna, p.position)) {
        progress = true;
        break;
      }
    }
  }
  for (int u = 0; u < U; ++u) {
    if (target[u] >= 0) continue;
    const int pos = current.entries[u].position;
    if (!try_place(u, pos)) {
      target[u] = pos;
      chosen[u] = {pos, 0};
      claimed.push_back(pos);
    }
  }

  PeriodDecision d;
  d.deployment.entries = chosen;
  for (int u = 0; u < U; ++u) {
    const int from = current.entries[u].position;
    d.moves.push_back({u, from, target[u], from == target[u] ? 0 : 1});
  }
  return d;
}

Deployment align_to_previous(const DistanceTable& table, const Deployment& from,
                             const Deployment& to) {
  if (from.size() != to.size())
    throw std::invalid_argument("align_to_previous: deployments differ in size");
  if (from.size() == 0) return to;
  const auto plan = plan_transition(table, from, to, default_kappa(from.size(), std::max(1, table.diameter())));
  Deployment out;
  for (int u = 0; u < from.size(); ++u) out.entries.push_back(to.entries[plan.matching[u]]);
  return out;
}

AdaptiveReconfigurator::AdaptiveReconfigurator(const ConfigSpace& space,
                                               const CandidateLibrary& library,
                                               ScoreWeights weights, int antennas,
                                               SearchScope scope)
    : space_(&space),
      library_(&library),
      table_(PositionGraph(space)),
      weights_(weights),
      antennas_(antennas),
      scope_(scope) {
  weights_.validate();
  if (antennas < 1 || antennas > space.size())
    throw std::invalid_argument(
        fmt::format("optimizer: antenna count {} outside [1, {}]", antennas, space.size()));
}

Deployment AdaptiveReconfigurator::initial_deployment() const {
  const int M = space_->size();
  std::vector<double> total(M, 0.0);
  for (const auto& grid : library_->per_grid)
    for (const auto& c : grid) total.at(c.position) += c.rate;
  std::vector<int> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return total[a] > total[b]; });
  std::vector<Placement> placed;
  std::vector<int> picked;
  for (int i : order) {
    if (static_cast<int>(picked.size()) == antennas_) break;
    const auto p = placement_of(*space_, i, 0);
    if (!placement_compatible(p, placed, space_->params().d_min)) continue;
    placed.push_back(p);
    picked.push_back(i);
  }
  std::sort(picked.begin(), picked.end());
  Deployment dep;
  for (int i : picked) dep.entries.push_back({i, 0});
  return dep;
}

PeriodDecision AdaptiveReconfigurator::select_full_space(const Deployment& current,
                                                         std::span<const double> score,
                                                         std::span<const int> orientation) const {
  const int M = space_->size();
  std::vector<int> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
  const double d_min = space_->params().d_min;
  std::vector<Placement> placed;
  Deployment picked;
  for (int i : order) {
    if (picked.size() == current.size()) break;
    const int pref = orientation[i] < 0 ? 0 : orientation[i];
    for (int j : {pref, 0}) {
      const auto p = placement_of(*space_, i, j);
      if (placement_compatible(p, placed, d_min)) {
        placed.push_back(p);
        picked.entries.push_back({i, j});
        break;
      }
      if (pref == 0) break;
    }
  }
  PeriodDecision d;
  d.deployment = align_to_previous(table_, current, picked);
  for (int u = 0; u < current.size(); ++u) {
    const int from = current.entries[u].position;
    const int to = d.deployment.entries[u].position;
    d.moves.push_back({u, from, to, table_(from, to)});
  }
  return d;
}

PeriodDecision AdaptiveReconfigurator::update(const Deployment& current,
                                              const PeriodForecast& forecast) {
  if (current.size() != antennas_)
    throw std::invalid_argument("optimizer: deployment size differs from the antenna count");
  ++period_;
  const double omega_curr = period_ <= weights_.warmup_periods ? 0.0 : weights_.omega;
  if (forecast.empty()) {
    PeriodDecision d;
    d.deployment = current;
    for (int u = 0; u < current.size(); ++u)
      d.moves.push_back({u, current.entries[u].position, current.entries[u].position, 0});
    d.omega_used = omega_curr;
    d.skipped = true;
    return d;
  }

  const int M = space_->size();
  const auto incumbents = current.position_indices();
  std::vector<int> candidates;
  if (scope_ == SearchScope::kFullSpace) {
    candidates.resize(M);
    std::iota(candidates.begin(), candidates.end(), 0);
  } else {
    for (int p : incumbents)
      for (int i : closed_neighborhood(*space_, p)) candidates.push_back(i);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }

  const auto prior = prior_scores(M, forecast, *library_, weights_);
  auto breakdown = score_positions(candidates, prior, history_, weights_, omega_curr, incumbents);
  std::vector<double> score(M, -std::numeric_limits<double>::infinity());
  std::vector<int> orientation(M, -1);
  for (const auto& s : breakdown) {
    score[s.position] = s.total;
    orientation[s.position] = choose_rotation(*space_, s.position, forecast, *library_);
  }

  PeriodDecision d = scope_ == SearchScope::kFullSpace
                         ? select_full_space(current, score, orientation)
                         : assign_positions(*space_, current, score, orientation);
  d.scores = std::move(breakdown);
  d.omega_used = omega_curr;
  return d;
}

void AdaptiveReconfigurator::record_period(const Deployment& deployment, double rate) {
  const auto positions = deployment.position_indices();
  history_.record(positions, rate);
}

}  // namespace sixdma
