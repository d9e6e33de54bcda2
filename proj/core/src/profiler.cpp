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

#include "sixdma/profiler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "sixdma/parallel.hpp"

namespace sixdma {

void LibraryHyper::validate() const {
  if (anchors < 1 || seeds < 1 || top_h < 1 || samples < 1)
    throw std::invalid_argument("library: anchors, seeds, top_h and samples must be >= 1");
  if (seeds > anchors) throw std::invalid_argument("library: seeds must not exceed anchors");
}

double single_surface_rate(const Surface& surface, const Vec3& user, const RadioParams& radio) {
  const double dist = (user - surface.origin).norm();
  const auto frame = make_frame(surface.origin, surface.normal, 1, 1, 0.0);
  const auto a = local_angles(frame, user);
  const double gain = db_to_linear(element_gain_db(radio, a.theta, a.phi));
  const double fc_ghz = radio.carrier_freq_hz * 1e-9;
  const double p_los = los_probability(dist, radio.d1, radio.d2);
  const double eta = p_los * db_to_linear(-path_loss_los_db(dist, fc_ghz)) +
                     (1.0 - p_los) * db_to_linear(-path_loss_nlos_mean_db(dist, fc_ghz));
  const double snr = radio.tx_power_w * surface.elements() * gain * eta / radio.noise_power_w;
  return radio.bandwidth_hz * std::log2(1.0 + snr);
}

std::vector<Vec3> sample_grid_points(const GridSpec& grid, int g, int count, SplitMix64& rng) {
  const Vec3 c = grid.center(g);
  std::uniform_real_distribution<double> off(-0.5 * grid.width, 0.5 * grid.width);
  std::vector<Vec3> pts;
  pts.reserve(count);
  for (int s = 0; s < count; ++s) {
    const double dx = off(rng);
    const double dy = off(rng);
    pts.push_back({c.x() + dx, c.y() + dy, c.z()});
  }
  return pts;
}

double grid_rate(const ConfigSpace& space, SurfaceConfig config, std::span<const Vec3> samples,
                 const Vec3& bs_position, const RadioParams& radio) {
  if (samples.empty()) throw std::invalid_argument("grid_rate: need at least one sample");
  const int side = radio.array_side();
  const Surface s{bs_position + space.position(config.position),
                  space.orientation(config.position, config.orientation), side, side,
                  catalog_surface_id(config.position, config.orientation)};
  double total = 0.0;
  for (const auto& p : samples) total += single_surface_rate(s, p, radio);
  return total / static_cast<double>(samples.size());
}

double grid_rate(const ConfigSpace& space, SurfaceConfig config, const GridSpec& grid, int g,
                 int samples, const Vec3& bs_position, const RadioParams& radio, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("grid_rate: need at least one sample");
  auto rng = substream(seed, StreamTag::kLibrarySamples, {static_cast<std::uint64_t>(g)});
  const auto pts = sample_grid_points(grid, g, samples, rng);
  return grid_rate(space, config, pts, bs_position, radio);
}

std::vector<int> hemisphere_filter(const ConfigSpace& space, const Vec3& grid_center,
                                   const Vec3& bs_position) {
  const Vec3 dir = grid_center - bs_position;
  std::vector<int> out;
  for (int i = 0; i < space.size(); ++i)
    if (space.orientation(i, 0).dot(dir) >= 0.0) out.push_back(i);
  return out;
}

std::vector<int> kmeans_anchors(const ConfigSpace& space, std::span<const int> candidates, int k,
                                int iterations, SplitMix64& rng) {
  const int n = static_cast<int>(candidates.size());
  if (n == 0 || k <= 0) return {};
  if (k >= n) return {candidates.begin(), candidates.end()};

  auto point = [&](int idx) -> const Vec3& { return space.position(candidates[idx]); };
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // k-means++ seeding.
  std::vector<Vec3> centers;
  centers.reserve(k);
  centers.push_back(point(std::min(n - 1, static_cast<int>(unif(rng) * n))));
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  while (static_cast<int>(centers.size()) < k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], (point(i) - centers.back()).squaredNorm());
      total += d2[i];
    }
    int pick = n - 1;
    if (total > 0.0) {
      double target = unif(rng) * total;
      for (int i = 0; i < n; ++i) {
        target -= d2[i];
        if (target <= 0.0 && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    centers.push_back(point(pick));
  }

  std::vector<int> label(n, 0);
  for (int it = 0; it < iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = (point(i) - centers[c]).squaredNorm();
        if (d < best) {
          best = d;
          label[i] = c;
        }
      }
    }
    std::vector<Vec3> sum(k, Vec3::Zero());
    std::vector<int> count(k, 0);
    for (int i = 0; i < n; ++i) {
      sum[label[i]] += point(i);
      ++count[label[i]];
    }
    for (int c = 0; c < k; ++c)
      if (count[c] > 0) centers[c] = sum[c] / count[c];  // empty clusters keep their center
  }

  std::vector<int> anchors;
  std::set<int> seen;
  for (const auto& c : centers) {
    int best_idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double d = (point(i) - c).squaredNorm();
      if (d < best) {
        best = d;
        best_idx = i;
      }
    }
    if (seen.insert(candidates[best_idx]).second) anchors.push_back(candidates[best_idx]);
  }
  return anchors;
}

namespace {

bool better(const Candidate& a, const Candidate& b) {
  if (a.rate != b.rate) return a.rate > b.rate;
  if (a.position != b.position) return a.position < b.position;
  return a.orientation < b.orientation;
}

struct GridResult {
  std::vector<Candidate> top;
  std::uint64_t evaluations = 0;
};

GridResult profile_grid(const ConfigSpace& space, const GridSpec& grid, int g,
                        const Vec3& bs_position, const RadioParams& radio, const LibraryHyper& hyper,
                        std::uint64_t seed) {
  GridResult out;
  const Vec3 center = grid.center(g);
  const auto hemisphere = hemisphere_filter(space, center, bs_position);
  if (hemisphere.empty())
    throw std::runtime_error(fmt::format("library: grid {} has an empty facing hemisphere", g));
  const std::set<int> facing(hemisphere.begin(), hemisphere.end());

  auto sample_rng = substream(seed, StreamTag::kLibrarySamples, {static_cast<std::uint64_t>(g)});
  const auto samples = sample_grid_points(grid, g, hyper.samples, sample_rng);

  auto cluster_rng = substream(seed, StreamTag::kLibraryClustering, {static_cast<std::uint64_t>(g)});
  const auto anchors = kmeans_anchors(space, hemisphere, hyper.anchors, 10, cluster_rng);

  // Coarse screening under the radial orientation.
  std::vector<Candidate> screened;
  for (int i : anchors) {
    screened.push_back({i, 0, grid_rate(space, {i, 0}, samples, bs_position, radio)});
    ++out.evaluations;
  }
  std::sort(screened.begin(), screened.end(), better);
  if (static_cast<int>(screened.size()) > hyper.seeds) screened.resize(hyper.seeds);

  // Neighborhood expansion inside the facing hemisphere.
  std::set<int> expanded;
  for (const auto& s : screened)
    for (int i : closed_neighborhood(space, s.position))
      if (facing.count(i)) expanded.insert(i);

  // Rotation refinement.
  std::vector<Candidate> all;
  for (int i : expanded) {
    for (int j = 0; j < space.orientation_count(i); ++j) {
      all.push_back({i, j, grid_rate(space, {i, j}, samples, bs_position, radio)});
      ++out.evaluations;
    }
  }
  std::sort(all.begin(), all.end(), better);
  if (static_cast<int>(all.size()) > hyper.top_h) all.resize(hyper.top_h);
  out.top = std::move(all);
  return out;
}

}  // namespace

CandidateLibrary build_library(const ConfigSpace& space, const GridSpec& grid,
                               const Vec3& bs_position, const RadioParams& radio,
                               const LibraryHyper& hyper, std::uint64_t seed,
                               std::string fingerprint) {
  hyper.validate();
  grid.validate();
  CandidateLibrary lib;
  lib.grid = grid;
  lib.hyper = hyper;
  lib.fingerprint = std::move(fingerprint);
  std::vector<GridResult> results(grid.count());
  parallel_for(grid.count(), [&](int g) {
    results[g] = profile_grid(space, grid, g, bs_position, radio, hyper, seed);
  });
  lib.per_grid.reserve(results.size());
  for (auto& r : results) {
    lib.evaluations += r.evaluations;
    lib.per_grid.push_back(std::move(r.top));
  }
  return lib;
}

std::vector<Candidate> exhaustive_grid_search(const ConfigSpace& space, const GridSpec& grid, int g,
                                              const Vec3& bs_position, const RadioParams& radio,
                                              int samples, int top_h, std::uint64_t seed) {
  auto rng = substream(seed, StreamTag::kLibrarySamples, {static_cast<std::uint64_t>(g)});
  const auto pts = sample_grid_points(grid, g, samples, rng);
  std::vector<Candidate> all;
  for (int i = 0; i < space.size(); ++i)
    for (int j = 0; j < space.orientation_count(i); ++j)
      all.push_back({i, j, grid_rate(space, {i, j}, pts, bs_position, radio)});
  std::sort(all.begin(), all.end(), better);
  if (static_cast<int>(all.size()) > top_h) all.resize(top_h);
  return all;
}

void save_library(std::ostream& out, const CandidateLibrary& lib) {
  nlohmann::ordered_json j;
  j["format"] = "sixdma-candidate-library";
  j["version"] = kLibraryFormatVersion;
  j["fingerprint"] = lib.fingerprint;
  j["grid"] = {{"extent_x", lib.grid.extent_x}, {"extent_y", lib.grid.extent_y},
               {"width", lib.grid.width}, {"z_veh", lib.grid.z_veh}};
  j["hyper"] = {{"anchors", lib.hyper.anchors}, {"seeds", lib.hyper.seeds},
                {"top_h", lib.hyper.top_h}, {"samples", lib.hyper.samples}};
  j["evaluations"] = lib.evaluations;
  auto grids = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < lib.per_grid.size(); ++g) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto& c : lib.per_grid[g]) entries.push_back({c.position, c.orientation, c.rate});
    grids.push_back({{"grid", g}, {"entries", std::move(entries)}});
  }
  j["grids"] = std::move(grids);
  out << j.dump(1) << '\n';
}

void save_library(const std::string& path, const CandidateLibrary& lib) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write library file {}", path));
  save_library(out, lib);
}

CandidateLibrary load_library(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw LibraryFormatError(fmt::format(
        "library file is not valid JSON ({}); delete it and rerun `sixdma build-library`", e.what()));
  }
  try {
    if (j.at("format").get<std::string>() != "sixdma-candidate-library")
      throw LibraryFormatError("library file has an unexpected format tag");
    const int version = j.at("version").get<int>();
    if (version != kLibraryFormatVersion)
      throw LibraryFormatError(fmt::format(
          "library file version {} is not supported (expected {}); rebuild it with `sixdma build-library`",
          version, kLibraryFormatVersion));
    CandidateLibrary lib;
    lib.fingerprint = j.at("fingerprint").get<std::string>();
    const auto& gj = j.at("grid");
    lib.grid = {gj.at("extent_x").get<double>(), gj.at("extent_y").get<double>(),
                gj.at("width").get<double>(), gj.at("z_veh").get<double>()};
    const auto& hj = j.at("hyper");
    lib.hyper = {hj.at("anchors").get<int>(), hj.at("seeds").get<int>(), hj.at("top_h").get<int>(),
                 hj.at("samples").get<int>()};
    lib.evaluations = j.at("evaluations").get<std::uint64_t>();
    const auto& grids = j.at("grids");
    if (static_cast<int>(grids.size()) != lib.grid.count())
      throw LibraryFormatError(fmt::format("library file lists {} grids, expected {}; rebuild it",
                                           grids.size(), lib.grid.count()));
    for (std::size_t g = 0; g < grids.size(); ++g) {
      if (grids[g].at("grid").get<std::size_t>() != g)
        throw LibraryFormatError(fmt::format("library grid records out of order at {}", g));
      std::vector<Candidate> entries;
      for (const auto& e : grids[g].at("entries"))
        entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
      lib.per_grid.push_back(std::move(entries));
    }
    return lib;
  } catch (const nlohmann::json::exception& e) {
    throw LibraryFormatError(fmt::format(
        "library file is missing fields ({}); delete it and rerun `sixdma build-library`", e.what()));
  }
}

CandidateLibrary load_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LibraryFormatError(fmt::format("cannot open library file {}", path));
  try {
    return load_library(in);
  } catch (const LibraryFormatError& e) {
    throw LibraryFormatError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace sixdma
