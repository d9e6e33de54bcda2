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

#include "sixdma/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace sixdma {

void GeometryParams::validate() const {
  if (!(r0 > 0.0)) throw std::invalid_argument("geometry: r0 must be positive");
  if (!(d_min > 0.0)) throw std::invalid_argument("geometry: d_min must be positive");
  if (meridians < 3) throw std::invalid_argument("geometry: at least 3 meridians required");
}

const char* to_string(PositionClass c) {
  switch (c) {
    case PositionClass::kPole: return "pole";
    case PositionClass::kFirstLatitude: return "first_latitude";
    case PositionClass::kInterior: return "interior";
  }
  return "unknown";
}

const char* to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::kNonBlocking: return "non_blocking";
    case ConstraintKind::kCpuVisibility: return "cpu_visibility";
    case ConstraintKind::kSeparation: return "separation";
    case ConstraintKind::kOccupancy: return "occupancy";
  }
  return "unknown";
}

int ConfigSpace::max_orientation_count() const noexcept {
  int m = 0;
  for (const auto& o : orientations_) m = std::max(m, static_cast<int>(o.size()));
  return m;
}

int ConfigSpace::circle_index(int row, int f) const {
  const int F = params_.meridians;
  if (row < 0 || row > intermediate_ + 1) throw std::out_of_range("circle_index: bad row");
  const int m = ((f % F) + F) % F;
  return 1 + row * F + m;
}

double first_latitude_angle(const GeometryParams& params) {
  params.validate();
  const double along_circle =
      params.d_min / (2.0 * params.r0 * std::sin(kPi / params.meridians));
  const double to_pole = params.d_min / (2.0 * params.r0);
  if (along_circle > 1.0 || to_pole > 1.0) {
    throw InfeasibleGeometry(fmt::format(
        "geometry infeasible: sphere of radius {} cannot hold {} points at spacing {}",
        params.r0, params.meridians, params.d_min));
  }
  return std::max(std::asin(along_circle), 2.0 * std::asin(to_pole));
}

namespace {

Vec3 on_sphere(double r0, double z, double azimuth) {
  const double rho = std::sqrt(std::max(0.0, r0 * r0 - z * z));
  return {rho * std::cos(azimuth), rho * std::sin(azimuth), z};
}

// Facet normals from consecutive neighbor pairs, oriented outward.
void add_facets(const std::vector<Vec3>& pos, int i, const std::vector<int>& ring,
                std::vector<Vec3>& normals, std::vector<std::array<int, 2>>& facets) {
  const Vec3& q = pos[i];
  const double scale = q.squaredNorm();
  const auto n = ring.size();
  for (std::size_t m = 0; m < n; ++m) {
    const int a = ring[m];
    const int b = ring[(m + 1) % n];
    Vec3 c = (pos[a] - q).cross(pos[b] - q);
    const double len = c.norm();
    if (len <= 1e-12 * scale) continue;  // degenerate triangle
    c /= len;
    if (c.dot(q) < 0.0) c = -c;
    normals.push_back(c);
    facets.push_back({a, b});
  }
}

}  // namespace

ConfigSpace build_config_space(const GeometryParams& params) {
  const double theta_first = first_latitude_angle(params);
  const double r0 = params.r0;
  const double d_min = params.d_min;
  const int F = params.meridians;

  const double z_first = r0 * std::cos(theta_first);
  const double axial = 2.0 * z_first;
  if (axial < d_min) {
    throw InfeasibleGeometry(fmt::format(
        "geometry infeasible: axial length {:.6g} between first latitudes is below d_min {}",
        axial, d_min));
  }
  const int L = static_cast<int>(std::floor(axial / d_min + 1e-12));
  const int rows = L + 2;

  // Circle heights: first latitudes at +-z_first, the L intermediate circles
  // at spacing d_min centered on the equator.
  std::vector<double> z(rows);
  z.front() = z_first;
  z.back() = -z_first;
  const double gap = 0.5 * (axial - (L - 1) * d_min);
  for (int r = 1; r <= L; ++r) z[r] = z_first - gap - (r - 1) * d_min;

  ConfigSpace s;
  s.params_ = params;
  s.theta_first_ = theta_first;
  s.intermediate_ = L;

  const int M = F * rows + 2;
  s.positions_.reserve(M);
  s.positions_.push_back({0.0, 0.0, r0});
  s.classes_.push_back(PositionClass::kPole);
  s.latitude_.push_back(0);
  s.meridian_.push_back(0);
  for (int r = 0; r < rows; ++r) {
    const bool first = (r == 0 || r == rows - 1);
    for (int f = 0; f < F; ++f) {
      s.positions_.push_back(on_sphere(r0, z[r], 2.0 * kPi * f / F));
      s.classes_.push_back(first ? PositionClass::kFirstLatitude : PositionClass::kInterior);
      s.latitude_.push_back(r + 1);
      s.meridian_.push_back(f);
    }
  }
  s.positions_.push_back({0.0, 0.0, -r0});
  s.classes_.push_back(PositionClass::kPole);
  s.latitude_.push_back(rows + 1);
  s.meridian_.push_back(0);

  double min_sep = std::numeric_limits<double>::infinity();
  for (int a = 0; a < M; ++a)
    for (int b = a + 1; b < M; ++b)
      min_sep = std::min(min_sep, (s.positions_[a] - s.positions_[b]).norm());
  if (min_sep < d_min - 1e-12) {
    throw InfeasibleGeometry(fmt::format(
        "geometry infeasible: {} intermediate latitudes leave a minimum separation of "
        "{:.6g} m < d_min {} m (r0={}, F={})",
        L, min_sep, d_min, r0, F));
  }

  const int north = 0;
  const int south = M - 1;
  s.neighbors_.assign(M, {});
  for (int f = 0; f < F; ++f) {
    s.neighbors_[north].push_back(s.circle_index(0, f));
    s.neighbors_[south].push_back(s.circle_index(rows - 1, f));
  }
  // Cyclic order N, NE, E, SE, S, SW, W, NW; the pole replaces the three
  // cells on the missing row of a first-latitude circle.
  static constexpr std::array<std::array<int, 2>, 8> kDirs{{
      {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}}};
  for (int r = 0; r < rows; ++r) {
    for (int f = 0; f < F; ++f) {
      auto& ring = s.neighbors_[s.circle_index(r, f)];
      for (const auto& [dr, df] : kDirs) {
        const int rr = r + dr;
        if (rr < 0) {
          if (df == 0) ring.push_back(north);
          continue;
        }
        if (rr >= rows) {
          if (df == 0) ring.push_back(south);
          continue;
        }
        ring.push_back(s.circle_index(rr, f + df));
      }
    }
  }

  s.orientations_.resize(M);
  s.facets_.resize(M);
  for (int i = 0; i < M; ++i) {
    s.orientations_[i].push_back(s.positions_[i].normalized());
    s.facets_[i].push_back({-1, -1});
    add_facets(s.positions_, i, s.neighbors_[i], s.orientations_[i], s.facets_[i]);
  }
  return s;
}

std::vector<int> Deployment::position_indices() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.position);
  return out;
}

ConstraintReport check_placements(std::span<const Placement> placements, double d_min) {
  ConstraintReport report;
  const int n = static_cast<int>(placements.size());
  for (int a = 0; a < n; ++a) {
    const auto& pa = placements[a];
    const double vis = pa.normal.dot(pa.position);
    if (vis < -kConstraintTolerance)
      report.violations.push_back({ConstraintKind::kCpuVisibility, a, -1, vis});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& pa = placements[a];
      const auto& pb = placements[b];
      const double facing = pa.normal.dot(pb.position - pa.position);
      if (facing > kConstraintTolerance)
        report.violations.push_back({ConstraintKind::kNonBlocking, a, b, facing});
      if (a < b) {
        const double sep = (pa.position - pb.position).norm();
        if (sep < d_min - kConstraintTolerance)
          report.violations.push_back({ConstraintKind::kSeparation, a, b, sep});
      }
    }
  }
  return report;
}

bool placement_compatible(const Placement& candidate, std::span<const Placement> fixed,
                          double d_min) {
  if (candidate.normal.dot(candidate.position) < -kConstraintTolerance) return false;
  for (const auto& other : fixed) {
    if (candidate.normal.dot(other.position - candidate.position) > kConstraintTolerance)
      return false;
    if (other.normal.dot(candidate.position - other.position) > kConstraintTolerance)
      return false;
    if ((candidate.position - other.position).norm() < d_min - kConstraintTolerance)
      return false;
  }
  return true;
}

ConstraintReport check_deployment(const ConfigSpace& space, const Deployment& dep) {
  std::vector<Placement> placements;
  placements.reserve(dep.entries.size());
  for (const auto& e : dep.entries) {
    if (e.position < 0 || e.position >= space.size())
      throw std::out_of_range(fmt::format("deployment: position {} out of range", e.position));
    if (e.orientation < 0 || e.orientation >= space.orientation_count(e.position))
      throw std::out_of_range(fmt::format("deployment: orientation {} out of range at position {}",
                                          e.orientation, e.position));
    placements.push_back({space.position(e.position), space.orientation(e.position, e.orientation)});
  }
  auto report = check_placements(placements, space.params().d_min);
  for (int a = 0; a < dep.size(); ++a)
    for (int b = a + 1; b < dep.size(); ++b)
      if (dep.entries[a].position == dep.entries[b].position)
        report.violations.push_back({ConstraintKind::kOccupancy, a, b, 0.0});
  return report;
}

std::vector<int> closed_neighborhood(const ConfigSpace& space, int pos) {
  if (pos < 0 || pos >= space.size())
    throw std::out_of_range(fmt::format("closed_neighborhood: position {} out of range", pos));
  auto nb = space.neighbors(pos);
  std::vector<int> out(nb.begin(), nb.end());
  out.push_back(pos);
  std::sort(out.begin(), out.end());
  return out;
}

void write_catalog(std::ostream& out, const ConfigSpace& space) {
  for (int i = 0; i < space.size(); ++i) {
    nlohmann::json rec;
    rec["index"] = i;
    rec["class"] = to_string(space.position_class(i));
    rec["latitude_index"] = space.latitude_index(i);
    rec["meridian_index"] = space.meridian_index(i);
    const auto& q = space.position(i);
    rec["xyz"] = {q.x(), q.y(), q.z()};
    auto normals = nlohmann::json::array();
    for (const auto& n : space.orientations(i)) normals.push_back({n.x(), n.y(), n.z()});
    rec["normals"] = std::move(normals);
    auto nb = space.neighbors(i);
    rec["neighbors"] = std::vector<int>(nb.begin(), nb.end());
    out << rec.dump() << '\n';
  }
}

}  // namespace sixdma
