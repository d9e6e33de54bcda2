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

#include <span>
#include <stdexcept>
#include <vector>

namespace sixdma {

class ConfigSpace;

class GraphDisconnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected adjacency graph over catalog positions.
class PositionGraph {
 public:
  explicit PositionGraph(const ConfigSpace& space);
  explicit PositionGraph(std::vector<std::vector<int>> adjacency);

  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::span<const int> neighbors(int i) const { return adjacency_.at(i); }

  bool is_symmetric() const;
  bool is_connected() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

/// Hop distances from `src` to every node; -1 marks unreachable nodes.
std::vector<int> bfs_from(const PositionGraph& graph, int src);

/// Exact shortest path length in steps. Throws GraphDisconnected if no path.
int bfs_distance(const PositionGraph& graph, int src, int dst);

/// All-pairs hop distances computed by one BFS per node, plus the diameter.
class DistanceTable {
 public:
  explicit DistanceTable(const PositionGraph& graph);

  int node_count() const noexcept { return n_; }
  int operator()(int a, int b) const { return dist_.at(static_cast<std::size_t>(a) * n_ + b); }
  int diameter() const noexcept { return diameter_; }

 private:
  int n_ = 0;
  int diameter_ = 0;
  std::vector<int> dist_;
};

}  // namespace sixdma
