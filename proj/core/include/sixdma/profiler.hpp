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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/grid.hpp"
#include "sixdma/rng.hpp"

namespace sixdma {

struct LibraryHyper {
  int anchors = 24;  // K-means anchor positions per grid
  int seeds = 6;     // anchors kept for neighborhood expansion
  int top_h = 5;     // entries stored per grid
  int samples = 20;  // user points per grid

  void validate() const;
};

struct Candidate {
  int position = 0;
  int orientation = 0;
  double rate = 0.0;  // mean single-surface rate over the grid (bit/s)
};

/// Per-grid preferred (position, orientation) pairs, best first.
struct CandidateLibrary {
  GridSpec grid;
  LibraryHyper hyper;
  std::string fingerprint;              // identifies the inputs it was built from
  std::vector<std::vector<Candidate>> per_grid;
  std::uint64_t evaluations = 0;        // (position, orientation) rate evaluations

  const std::vector<Candidate>& candidates(int g) const { return per_grid.at(g); }
};

class LibraryFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single-user rate through one surface from large-scale terms only: the
/// LoS probability blends the LoS and mean NLoS path gains.
double single_surface_rate(const Surface& surface, const Vec3& user, const RadioParams& radio);

std::vector<Vec3> sample_grid_points(const GridSpec& grid, int g, int count, SplitMix64& rng);

/// Mean single-surface rate over the given user points.
double grid_rate(const ConfigSpace& space, SurfaceConfig config, std::span<const Vec3> samples,
                 const Vec3& bs_position, const RadioParams& radio);

/// Mean rate over `samples` points drawn uniformly in grid g.
double grid_rate(const ConfigSpace& space, SurfaceConfig config, const GridSpec& grid, int g,
                 int samples, const Vec3& bs_position, const RadioParams& radio, std::uint64_t seed);

/// Positions whose radial normal faces the grid center: n_i . (c_g - q_BS) >= 0.
std::vector<int> hemisphere_filter(const ConfigSpace& space, const Vec3& grid_center,
                                   const Vec3& bs_position);

/// Lloyd's algorithm with k-means++ seeding on the 3D coordinates of
/// `candidates`; returns the candidate nearest each centroid (deduplicated).
std::vector<int> kmeans_anchors(const ConfigSpace& space, std::span<const int> candidates, int k,
                                int iterations, SplitMix64& rng);

/// Anchor screening, neighborhood expansion and rotation refinement for
/// every grid; keeps the Top-H pairs per grid.
CandidateLibrary build_library(const ConfigSpace& space, const GridSpec& grid,
                               const Vec3& bs_position, const RadioParams& radio,
                               const LibraryHyper& hyper, std::uint64_t seed,
                               std::string fingerprint = {});

/// Exhaustive Top-H over every (position, orientation) for one grid; the
/// reference the hierarchical search is measured against.
std::vector<Candidate> exhaustive_grid_search(const ConfigSpace& space, const GridSpec& grid, int g,
                                              const Vec3& bs_position, const RadioParams& radio,
                                              int samples, int top_h, std::uint64_t seed);

void save_library(std::ostream& out, const CandidateLibrary& lib);
void save_library(const std::string& path, const CandidateLibrary& lib);
/// Throws LibraryFormatError on malformed or mismatched files.
CandidateLibrary load_library(std::istream& in);
CandidateLibrary load_library(const std::string& path);

inline constexpr int kLibraryFormatVersion = 1;

}  // namespace sixdma
