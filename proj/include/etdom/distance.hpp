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

#ifndef ETDOM_DISTANCE_HPP
#define ETDOM_DISTANCE_HPP

#include <limits>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

/// Marker for "no path" in BFS output.
inline constexpr int kUnreachable = -1;

/// Diameter of a disconnected graph. Compares greater than every finite
/// diameter, so "diameter >= 3" style tests select disconnected sets.
inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

/// Hop distances from `source`; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Max pairwise distance by all-pairs BFS; kInfiniteDiameter when the graph
/// is disconnected. Requires order() >= 1.
int diameter(const Graph& g);

/// Double-BFS diameter for trees, O(n).
int tree_diameter(const Tree& t);

/// Row-major n x n distance table (kUnreachable for different components).
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<int> dist_;
};

/// G^k: u ~ v iff 1 <= dist_G(u, v) <= k. Requires k >= 1.
Graph power_graph(const Graph& g, int k);

}  // namespace etdom

#endif  // ETDOM_DISTANCE_HPP
