// Copyright 2026 The etdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etdom/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace etdom {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw std::out_of_range("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter of the empty graph is undefined");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) return kInfiniteDiameter;
      best = std::max(best, d);
    }
  }
  return best;
}

int tree_diameter(const Tree& t) {
  auto from_zero = bfs_distances(t.graph(), 0);
  auto far = static_cast<Vertex>(std::max_element(from_zero.begin(), from_zero.end()) - from_zero.begin());
  auto from_far = bfs_distances(t.graph(), far);
  return *std::max_element(from_far.begin(), from_far.end());
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_) {
  for (Vertex v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(v * n_));
  }
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph power needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= k) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

}  // namespace etdom
