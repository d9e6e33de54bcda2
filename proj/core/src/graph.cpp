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

#include "sixdma/graph.hpp"

#include <algorithm>
#include <queue>

#include <fmt/format.h>

#include "sixdma/geometry.hpp"

namespace sixdma {

PositionGraph::PositionGraph(const ConfigSpace& space) {
  adjacency_.resize(space.size());
  for (int i = 0; i < space.size(); ++i) {
    auto nb = space.neighbors(i);
    adjacency_[i].assign(nb.begin(), nb.end());
  }
}

PositionGraph::PositionGraph(std::vector<std::vector<int>> adjacency)
    : adjacency_(std::move(adjacency)) {
  const int n = node_count();
  for (const auto& row : adjacency_)
    for (int j : row)
      if (j < 0 || j >= n) throw std::out_of_range("PositionGraph: neighbor index out of range");
}

bool PositionGraph::is_symmetric() const {
  for (int i = 0; i < node_count(); ++i)
    for (int j : adjacency_[i]) {
      const auto& back = adjacency_[j];
      if (std::find(back.begin(), back.end(), i) == back.end()) return false;
    }
  return true;
}

bool PositionGraph::is_connected() const {
  if (node_count() == 0) return true;
  const auto d = bfs_from(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> bfs_from(const PositionGraph& graph, int src) {
  const int n = graph.node_count();
  if (src < 0 || src >= n) throw std::out_of_range("bfs: source out of range");
  std::vector<int> dist(n, -1);
  std::queue<int> frontier;
  dist[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : graph.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      frontier.push(v);
    }
  }
  return dist;
}

int bfs_distance(const PositionGraph& graph, int src, int dst) {
  if (dst < 0 || dst >= graph.node_count()) throw std::out_of_range("bfs: target out of range");
  const int d = bfs_from(graph, src)[dst];
  if (d < 0) throw GraphDisconnected(fmt::format("no path between {} and {}", src, dst));
  return d;
}

DistanceTable::DistanceTable(const PositionGraph& graph) : n_(graph.node_count()) {
  dist_.resize(static_cast<std::size_t>(n_) * n_);
  for (int s = 0; s < n_; ++s) {
    const auto row = bfs_from(graph, s);
    for (int t = 0; t < n_; ++t) {
      if (row[t] < 0)
        throw GraphDisconnected(fmt::format("position graph disconnected: {} cannot reach {}", s, t));
      dist_[static_cast<std::size_t>(s) * n_ + t] = row[t];
      diameter_ = std::max(diameter_, row[t]);
    }
  }
}

}  // namespace sixdma
