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
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/types.hpp"

namespace sixdma {

/// Thrown when no latitude-longitude layout satisfies the separation limits.
class InfeasibleGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeometryParams {
  double r0 = 0.5;      // sphere radius (m)
  double d_min = 0.1;   // minimum surface separation (m)
  int meridians = 12;   // F

  void validate() const;
};

enum class PositionClass { kPole, kFirstLatitude, kInterior };

const char* to_string(PositionClass c);

/// Immutable catalog of discrete surface positions and orientations on the
/// sphere, with the neighbor topology used for movement.
///
/// Index layout: north pole first, then the L+2 latitude circles from north
/// to south (F points each, meridian order), then the south pole.
/// Orientation 0 of every position is the radial normal; the remaining
/// orientations are facet normals built from consecutive neighbor pairs.
class ConfigSpace {
 public:
  const GeometryParams& params() const noexcept { return params_; }
  double theta_first() const noexcept { return theta_first_; }
  /// Number of intermediate latitude circles (L).
  int intermediate_latitudes() const noexcept { return intermediate_; }
  int meridians() const noexcept { return params_.meridians; }

  int size() const noexcept { return static_cast<int>(positions_.size()); }
  int north_pole() const noexcept { return 0; }
  int south_pole() const noexcept { return size() - 1; }

  const Vec3& position(int i) const { return positions_.at(i); }
  std::span<const Vec3> positions() const noexcept { return positions_; }

  int orientation_count(int i) const {
    return static_cast<int>(orientations_.at(i).size());
  }
  int max_orientation_count() const noexcept;
  const Vec3& orientation(int i, int j) const { return orientations_.at(i).at(j); }
  std::span<const Vec3> orientations(int i) const { return orientations_.at(i); }
  /// Neighbor pair a facet orientation was built from; {-1, -1} for radial.
  std::array<int, 2> facet_vertices(int i, int j) const {
    return facets_.at(i).at(j);
  }

  std::span<const int> neighbors(int i) const { return neighbors_.at(i); }
  PositionClass position_class(int i) const { return classes_.at(i); }
  /// 0 = north pole, 1..L+2 = latitude circles, L+3 = south pole.
  int latitude_index(int i) const { return latitude_.at(i); }
  int meridian_index(int i) const { return meridian_.at(i); }

  /// Index of the point on latitude circle `row` (0-based, north to south)
  /// and meridian `f` (taken modulo F).
  int circle_index(int row, int f) const;

  friend ConfigSpace build_config_space(const GeometryParams& params);

 private:
  ConfigSpace() = default;

  GeometryParams params_{};
  double theta_first_ = 0.0;
  int intermediate_ = 0;
  std::vector<Vec3> positions_;
  std::vector<std::vector<Vec3>> orientations_;
  std::vector<std::vector<std::array<int, 2>>> facets_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<PositionClass> classes_;
  std::vector<int> latitude_;
  std::vector<int> meridian_;
};

/// Polar angle of the first latitude circle; satisfies both the chord
/// condition along the circle and the pole-to-circle chord condition.
double first_latitude_angle(const GeometryParams& params);

ConfigSpace build_config_space(const GeometryParams& params);

/// Position plus orientation index for one activated surface.
struct SurfaceConfig {
  int position = 0;
  int orientation = 0;

  friend bool operator==(const SurfaceConfig&, const SurfaceConfig&) = default;
};

/// Activated surfaces; list order is antenna identity.
struct Deployment {
  std::vector<SurfaceConfig> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  std::vector<int> position_indices() const;

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

/// A surface placement in the BS-centered frame, independent of the catalog.
struct Placement {
  Vec3 position;
  Vec3 normal;
};

enum class ConstraintKind { kNonBlocking, kCpuVisibility, kSeparation, kOccupancy };

const char* to_string(ConstraintKind k);

struct Violation {
  ConstraintKind kind;
  int first;   // entry index
  int second;  // entry index, or -1 for single-surface constraints
  double value;
};

struct ConstraintReport {
  std::vector<Violation> violations;

  bool feasible() const noexcept { return violations.empty(); }
};

inline constexpr double kConstraintTolerance = 1e-9;

/// Evaluate non-blocking, CPU-visibility and separation constraints.
ConstraintReport check_placements(std::span<const Placement> placements, double d_min);

/// Same checks for catalog entries, plus single occupancy.
/// Throws std::out_of_range for indices outside the catalog.
ConstraintReport check_deployment(const ConfigSpace& space, const Deployment& dep);

/// True if `candidate` can join `fixed` without violating any constraint.
bool placement_compatible(const Placement& candidate,
                          std::span<const Placement> fixed, double d_min);

/// The position itself plus its neighbors, sorted ascending.
std::vector<int> closed_neighborhood(const ConfigSpace& space, int pos);

/// One JSON record per line: index, class, grid coordinates, xyz, normals.
void write_catalog(std::ostream& out, const ConfigSpace& space);

}  // namespace sixdma
