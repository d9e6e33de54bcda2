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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/profiler.hpp"

namespace sixdma {

class MetricsFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CostSummaryRow {
  std::string scheme;
  int interval = 0;
  int periods = 0;
  double mean_move_steps = 0.0;
  int max_move_steps = 0;
  double mean_time_steps = 0.0;
  int max_time_steps = 0;
  double mean_rate_bps = 0.0;
};

inline constexpr const char* kCostReportHeader =
    "scheme,N,periods,mean_move_steps,max_move_steps,mean_time_steps,max_time_steps,mean_rate_bps";

/// Aggregates a metrics CSV per (scheme, N), schemes in first-seen order, N ascending.
std::vector<CostSummaryRow> cost_report(std::istream& metrics);
void write_cost_report(std::ostream& out, const std::vector<CostSummaryRow>& rows);

inline constexpr const char* kHeatmapHeader = "grid,gx,gy,cx,cy,best_rate_bps";

/// Best stored rate per grid, one row per grid.
void write_heatmap(std::ostream& out, const CandidateLibrary& library);

}  // namespace sixdma
