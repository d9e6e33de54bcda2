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

#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "sixdma/graph.hpp"
#include "sixdma/profiler.hpp"
#include "test_support.hpp"

namespace sixdma {
namespace {

const Vec3 kBs(150, 150, 10);

const CandidateLibrary& default_library() {
  static const CandidateLibrary lib =
      build_library(testing::table1_space(), GridSpec{}, kBs, RadioParams{}, LibraryHyper{}, 7, "test");
  return lib;
}

TEST(SingleSurfaceRate, BoresightBeatsRotated) {
  const RadioParams r;
  const Vec3 user(60, 0, 0);
  const Surface facing{Vec3::Zero(), Vec3::UnitX(), 2, 2, 0};
  const Surface tilted{Vec3::Zero(), Vec3(std::cos(0.5), std::sin(0.5), 0), 2, 2, 0};
  const Surface away{Vec3::Zero(), -Vec3::UnitX(), 2, 2, 0};
  EXPECT_GT(single_surface_rate(facing, user, r), single_surface_rate(tilted, user, r));
  EXPECT_GT(single_surface_rate(tilted, user, r), single_surface_rate(away, user, r));
}

TEST(SingleSurfaceRate, DecreasesWithDistance) {
  const RadioParams r;
  const Surface s{Vec3::Zero(), Vec3::UnitX(), 2, 2, 0};
  double prev = 1e30;
  for (double d = 5; d < 400; d += 5) {
    const double v = single_surface_rate(s, Vec3(d, 0, 0), r);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Hemisphere, PartitionsByFacingDirection) {
  const auto& s = testing::table1_space();
  const Vec3 east = kBs + Vec3(100, 0, 0);
  const Vec3 west = kBs + Vec3(-100, 0, 0);
  const auto he = hemisphere_filter(s, east, kBs);
  const auto hw = hemisphere_filter(s, west, kBs);
  for (int i : he) EXPECT_GE(s.orientation(i, 0).dot(east - kBs), 0.0);
  std::set<int> all(he.begin(), he.end());
  all.insert(hw.begin(), hw.end());
  EXPECT_EQ(static_cast<int>(all.size()), s.size());
  EXPECT_GT(he.size(), s.size() / 4u);
  EXPECT_LT(he.size(), 3u * s.size() / 4u);
}

TEST(KMeans, AnchorsAreDistinctCandidates) {
  const auto& s = testing::table1_space();
  const auto cand = hemisphere_filter(s, kBs + Vec3(50, 20, -8.5), kBs);
  auto rng = substream(3, StreamTag::kTest, {});
  const auto a = kmeans_anchors(s, cand, 24, 10, rng);
  EXPECT_GE(a.size(), 12u);
  EXPECT_LE(a.size(), 24u);
  std::set<int> uniq(a.begin(), a.end());
  EXPECT_EQ(uniq.size(), a.size());
  for (int i : a) EXPECT_NE(std::find(cand.begin(), cand.end(), i), cand.end());
  auto rng2 = substream(3, StreamTag::kTest, {});
  EXPECT_EQ(kmeans_anchors(s, cand, static_cast<int>(cand.size()) + 3, 10, rng2), cand);
}

TEST(Library, EntriesSortedAndFacing) {
  const auto& s = testing::table1_space();
  const auto& lib = default_library();
  ASSERT_EQ(static_cast<int>(lib.per_grid.size()), lib.grid.count());
  for (int g = 0; g < lib.grid.count(); ++g) {
    const auto& c = lib.candidates(g);
    ASSERT_EQ(static_cast<int>(c.size()), lib.hyper.top_h);
    const auto facing = hemisphere_filter(s, lib.grid.center(g), kBs);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(std::binary_search(facing.begin(), facing.end(), c[i].position));
      EXPECT_LT(c[i].orientation, s.orientation_count(c[i].position));
      EXPECT_GT(c[i].rate, 0.0);
      if (i > 0) EXPECT_GE(c[i - 1].rate, c[i].rate);
    }
  }
}

TEST(Library, EvaluationCountIsBounded) {
  const auto& s = testing::table1_space();
  const auto& lib = default_library();
  std::uint64_t exhaustive = 0;
  for (int i = 0; i < s.size(); ++i) exhaustive += s.orientation_count(i);
  exhaustive *= lib.grid.count();
  int max_orient = 0, max_hood = 0;
  for (int i = 0; i < s.size(); ++i) {
    max_orient = std::max(max_orient, s.orientation_count(i));
    max_hood = std::max(max_hood, static_cast<int>(closed_neighborhood(s, i).size()));
  }
  const std::uint64_t per_grid = lib.hyper.anchors + lib.hyper.seeds * max_hood * max_orient;
  EXPECT_LE(lib.evaluations, per_grid * lib.grid.count());
  EXPECT_LT(lib.evaluations, exhaustive / 2);
}

TEST(Library, TopEntryCloseToExhaustive) {
  const auto& s = testing::table1_space();
  const auto& lib = default_library();
  const RadioParams r;
  for (int g = 0; g < lib.grid.count(); g += 13) {
    const auto ex = exhaustive_grid_search(s, lib.grid, g, kBs, r, lib.hyper.samples, 1, 7);
    ASSERT_EQ(ex.size(), 1u);
    EXPECT_GE(lib.candidates(g)[0].rate, 0.9 * ex[0].rate) << "grid " << g;
    EXPECT_LE(lib.candidates(g)[0].rate, ex[0].rate * (1 + 1e-12));
  }
}

TEST(Library, SingleEntryPerGrid) {
  const GridSpec small{60, 60, 15, 1.5};
  LibraryHyper h;
  h.top_h = 1;
  const auto lib = build_library(testing::table1_space(), small, Vec3(30, 30, 10), RadioParams{}, h, 1);
  for (const auto& c : lib.per_grid) EXPECT_EQ(c.size(), 1u);
}

TEST(Library, GridRateMatchesStoredRate) {
  const auto& s = testing::table1_space();
  const auto& lib = default_library();
  for (int g : {0, 57, 210, 399}) {
    const auto& c = lib.candidates(g)[0];
    EXPECT_DOUBLE_EQ(grid_rate(s, {c.position, c.orientation}, lib.grid, g, lib.hyper.samples, kBs,
                               RadioParams{}, 7),
                     c.rate);
  }
}

TEST(Library, Deterministic) {
  const GridSpec small{60, 60, 15, 1.5};
  const auto& s = testing::table1_space();
  const auto a = build_library(s, small, Vec3(30, 30, 10), RadioParams{}, LibraryHyper{}, 5);
  const auto b = build_library(s, small, Vec3(30, 30, 10), RadioParams{}, LibraryHyper{}, 5);
  std::ostringstream sa, sb;
  save_library(sa, a);
  save_library(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(LibraryIo, RoundTrip) {
  const auto& lib = default_library();
  std::stringstream ss;
  save_library(ss, lib);
  const auto back = load_library(ss);
  EXPECT_EQ(back.fingerprint, "test");
  EXPECT_EQ(back.evaluations, lib.evaluations);
  EXPECT_EQ(back.hyper.top_h, lib.hyper.top_h);
  ASSERT_EQ(back.per_grid.size(), lib.per_grid.size());
  for (std::size_t g = 0; g < lib.per_grid.size(); ++g) {
    ASSERT_EQ(back.per_grid[g].size(), lib.per_grid[g].size());
    for (std::size_t i = 0; i < lib.per_grid[g].size(); ++i) {
      EXPECT_EQ(back.per_grid[g][i].position, lib.per_grid[g][i].position);
      EXPECT_EQ(back.per_grid[g][i].orientation, lib.per_grid[g][i].orientation);
      EXPECT_EQ(back.per_grid[g][i].rate, lib.per_grid[g][i].rate);
    }
  }
}

TEST(LibraryIo, CorruptFilesGiveActionableErrors) {
  auto message_of = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      load_library(in);
    } catch (const LibraryFormatError& e) {
      return e.what();
    }
    return {};
  };
  EXPECT_NE(message_of("{not json").find("build-library"), std::string::npos);
  EXPECT_NE(message_of(R"({"format":"sixdma-candidate-library"})").find("build-library"), std::string::npos);
  EXPECT_NE(message_of(R"({"format":"sixdma-candidate-library","version":99})").find("build-library"),
            std::string::npos);
  EXPECT_FALSE(message_of(R"({"format":"other"})").empty());

  std::ostringstream out;
  save_library(out, default_library());
  std::string truncated = out.str().substr(0, out.str().size() / 2);
  EXPECT_FALSE(message_of(truncated).empty());
  EXPECT_THROW(load_library(std::string("/nonexistent/lib.json")), LibraryFormatError);
}

}  // namespace
}  // namespace sixdma
