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

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/mobility.hpp"
#include "sixdma/profiler.hpp"

namespace sixdma {

enum class Scheme { kFpa, kCircular, kRotationOnly, kFullReconfig, kSingleStep };

const char* to_string(Scheme s);
/// Throws std::invalid_argument for unknown names.
Scheme parse_scheme(std::string_view name);
std::span<const Scheme> all_schemes();

inline constexpr int kSectorCount = 4;
inline constexpr double kSectorDowntiltDeg = 15.0;

/// Latitude circle closest to the equator (northern one on a tie).
int equator_row(const ConfigSpace& space);

/// Squarest rows x cols factorization with rows <= cols.
std::array<int, 2> sector_array_shape(int elements);

/// Outward horizontal direction at `position`, tilted toward the ground.
Vec3 downtilted_normal(const Vec3& position, double downtilt_deg);

/// Catalog deployment for movement accounting plus the surfaces the channel sees.
struct SchemeLayout {
  Deployment deployment;
  std::vector<Surface> surfaces;
  std::vector<Placement> placements;
};

/// Equator positions of the sectors for a given meridian offset.
std::vector<int> sector_positions(const ConfigSpace& space, int offset);

/// Four static downtilted sectors at azimuths 0, 90, 180 and 270 degrees.
SchemeLayout fpa_layout(const ConfigSpace& space, const Vec3& bs_position,
                        const RadioParams& radio, int antennas);

/// Sectors rotated along the equator ring by `offset` meridians.
SchemeLayout circular_layout(const ConfigSpace& space, int offset, const Vec3& bs_position,
                             const RadioParams& radio, int antennas);

/// Meridian offset maximizing the density-weighted best-sector rate over active grids.
/// Keeps `previous` when the forecast is empty or no offset beats it.
int circular_best_offset(const ConfigSpace& space, const PeriodForecast& forecast,
                         const GridSpec& grid, const Vec3& bs_position, const RadioParams& radio,
                         int antennas, int previous);

/// FPA positions with per-period catalog orientations from the rotation rule.
SchemeLayout rotation_only_layout(const ConfigSpace& space, const PeriodForecast& forecast,
                                  const CandidateLibrary& library, const Vec3& bs_position,
                                  const RadioParams& radio, int antennas);

}  // namespace sixdma
