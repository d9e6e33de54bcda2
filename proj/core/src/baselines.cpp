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

#include "sixdma/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "sixdma/optimizer.hpp"

namespace sixdma {

namespace {

constexpr std::array<Scheme, 5> kSchemes = {Scheme::kFpa, Scheme::kCircular, Scheme::kRotationOnly,
                                            Scheme::kFullReconfig, Scheme::kSingleStep};

// Marks sector surfaces so their channel draws never alias catalog surfaces.
constexpr int kSectorSurfaceTag = 0xFFFF;

std::array<int, 2> sector_shape_for(const RadioParams& radio, int antennas) {
  const int total = antennas * radio.elements_per_surface;
  if (total % kSectorCount != 0)
    throw std::invalid_argument(
        fmt::format("sector baselines need U*Q divisible by {}, got {}", kSectorCount, total));
  return sector_array_shape(total / kSectorCount);
}

SchemeLayout sector_layout(const ConfigSpace& space, std::span<const int> positions,
                           const Vec3& bs_position, const RadioParams& radio, int antennas) {
  const auto shape = sector_shape_for(radio, antennas);
  SchemeLayout out;
  for (int p : positions) {
    const Vec3 n = downtilted_normal(space.position(p), kSectorDowntiltDeg);
    out.deployment.entries.push_back({p, 0});
    out.placements.push_back({space.position(p), n});
    out.surfaces.push_back({bs_position + space.position(p), n, shape[0], shape[1],
                            catalog_surface_id(p, kSectorSurfaceTag)});
  }
  return out;
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::kFpa: return "fpa";
    case Scheme::kCircular: return "circular";
    case Scheme::kRotationOnly: return "rotation_only";
    case Scheme::kFullReconfig: return "full_reconfig";
    case Scheme::kSingleStep: return "single_step";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : kSchemes)
    if (name == to_string(s)) return s;
  throw std::invalid_argument(fmt::format(
      "unknown scheme '{}' (expected fpa, circular, rotation_only, full_reconfig or single_step)", name));
}

std::span<const Scheme> all_schemes() { return kSchemes; }

int equator_row(const ConfigSpace& space) {
  const int rows = space.intermediate_latitudes() + 2;
  int best = 0;
  for (int r = 1; r < rows; ++r)
    if (std::abs(space.position(space.circle_index(r, 0)).z()) <
        std::abs(space.position(space.circle_index(best, 0)).z()) - 1e-12)
      best = r;
  return best;
}

std::array<int, 2> sector_array_shape(int elements) {
  if (elements < 1) throw std::invalid_argument("sector_array_shape: need at least one element");
  int rows = static_cast<int>(std::sqrt(static_cast<double>(elements)));
  while (rows > 1 && elements % rows != 0) --rows;
  return {rows, elements / rows};
}

Vec3 downtilted_normal(const Vec3& position, double downtilt_deg) {
  Vec3 h(position.x(), position.y(), 0.0);
  if (h.norm() < 1e-12) throw std::invalid_argument("downtilted_normal: position on the vertical axis");
  h.normalize();
  const double t = deg_to_rad(downtilt_deg);
  return (std::cos(t) * h - std::sin(t) * Vec3::UnitZ()).normalized();
}

std::vector<int> sector_positions(const ConfigSpace& space, int offset) {
  const int F = space.meridians();
  const int row = equator_row(space);
  std::vector<int> out;
  for (int s = 0; s < kSectorCount; ++s) {
    const int f = static_cast<int>(std::lround(static_cast<double>(s * F) / kSectorCount)) + offset;
    out.push_back(space.circle_index(row, ((f % F) + F) % F));
  }
  return out;
}

SchemeLayout fpa_layout(const ConfigSpace& space, const Vec3& bs_position,
                        const RadioParams& radio, int antennas) {
  return sector_layout(space, sector_positions(space, 0), bs_position, radio, antennas);
}

SchemeLayout circular_layout(const ConfigSpace& space, int offset, const Vec3& bs_position,
                             const RadioParams& radio, int antennas) {
  return sector_layout(space, sector_positions(space, offset), bs_position, radio, antennas);
}

int circular_best_offset(const ConfigSpace& space, const PeriodForecast& forecast,
                         const GridSpec& grid, const Vec3& bs_position, const RadioParams& radio,
                         int antennas, int previous) {
  if (forecast.empty()) return previous;
  const int span = std::max(1, (space.meridians() + kSectorCount - 1) / kSectorCount);
  auto value = [&](int offset) {
    const auto layout = circular_layout(space, offset, bs_position, radio, antennas);
    double v = 0.0;
    for (const auto& a : forecast.active) {
      double best = 0.0;
      for (const auto& s : layout.surfaces)
        best = std::max(best, single_surface_rate(s, grid.center(a.grid), radio));
      v += a.rho * best;
    }
    return v;
  };
  int best = ((previous % span) + span) % span;
  double best_value = value(best);
  for (int o = 0; o < span; ++o) {
    const double v = value(o);
    if (v > best_value) {
      best = o;
      best_value = v;
    }
  }
  return best;
}

SchemeLayout rotation_only_layout(const ConfigSpace& space, const PeriodForecast& forecast,
                                  const CandidateLibrary& library, const Vec3& bs_position,
                                  const RadioParams& radio, int antennas) {
  const auto shape = sector_shape_for(radio, antennas);
  SchemeLayout out;
  for (int p : sector_positions(space, 0)) {
    int j = choose_rotation(space, p, forecast, library);
    if (!placement_compatible({space.position(p), space.orientation(p, j)}, out.placements,
                              space.params().d_min))
      j = 0;
    const Vec3& n = space.orientation(p, j);
    out.deployment.entries.push_back({p, j});
    out.placements.push_back({space.position(p), n});
    out.surfaces.push_back({bs_position + space.position(p), n, shape[0], shape[1],
                            catalog_surface_id(p, j)});
  }
  return out;
}

}  // namespace sixdma
