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

#include "sixdma/report.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "sixdma/baselines.hpp"
#include "sixdma/simulation.hpp"

namespace sixdma {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::vector<CostSummaryRow> cost_report(std::istream& metrics) {
  std::string line;
  if (!std::getline(metrics, line) || line.empty()) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMetricsHeader)
    throw MetricsFormatError(fmt::format("unexpected metrics header '{}'", line));

  struct Acc {
    int periods = 0;
    double move = 0.0, time = 0.0, rate = 0.0;
    int max_move = 0, max_time = 0;
  };
  std::vector<std::string> scheme_order;
  std::map<std::pair<std::string, int>, Acc> acc;
  int lineno = 1;
  while (std::getline(metrics, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 10)
      throw MetricsFormatError(fmt::format("metrics line {}: expected 10 fields, got {}", lineno, f.size()));
    try {
      parse_scheme(f[0]);
    } catch (const std::invalid_argument& e) {
      throw MetricsFormatError(fmt::format("metrics line {}: {}", lineno, e.what()));
    }
    try {
      const int n = std::stoi(f[4]);
      const double rate = std::stod(f[6]);
      const int move = std::stoi(f[7]);
      const int time = std::stoi(f[8]);
      if (std::find(scheme_order.begin(), scheme_order.end(), f[0]) == scheme_order.end())
        scheme_order.push_back(f[0]);
      auto& a = acc[{f[0], n}];
      ++a.periods;
      a.move += move;
      a.time += time;
      a.rate += rate;
      a.max_move = std::max(a.max_move, move);
      a.max_time = std::max(a.max_time, time);
    } catch (const std::logic_error&) {
      throw MetricsFormatError(fmt::format("metrics line {}: non-numeric field", lineno));
    }
  }

  std::vector<CostSummaryRow> rows;
  for (const auto& scheme : scheme_order) {
    for (const auto& [k, a] : acc) {
      if (k.first != scheme) continue;
      rows.push_back({scheme, k.second, a.periods, a.move / a.periods, a.max_move, a.time / a.periods,
                      a.max_time, a.rate / a.periods});
    }
  }
  return rows;
}

void write_cost_report(std::ostream& out, const std::vector<CostSummaryRow>& rows) {
  out << kCostReportHeader << '\n';
  for (const auto& r : rows)
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.scheme, r.interval, r.periods, r.mean_move_steps,
                       r.max_move_steps, r.mean_time_steps, r.max_time_steps, r.mean_rate_bps);
}

void write_heatmap(std::ostream& out, const CandidateLibrary& library) {
  out << kHeatmapHeader << '\n';
  for (int g = 0; g < library.grid.count(); ++g) {
    const auto c = library.grid.center(g);
    const auto& cands = library.candidates(g);
    const double best = cands.empty() ? 0.0 : cands.front().rate;
    out << fmt::format("{},{},{},{},{},{}\n", g, library.grid.gx(g), library.grid.gy(g), c.x(), c.y(), best);
  }
}

}  // namespace sixdma
