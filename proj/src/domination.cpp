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

#include "etdom/domination.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "etdom/distance.hpp"

namespace etdom {
namespace {

using Cost = std::int64_t;
constexpr Cost kInfinity = std::numeric_limits<Cost>::max() / 4;

Cost add(Cost a, Cost b) { return std::min(a + b, kInfinity); }

// State indices for distance parameter k:
//   s in [0, k]       a chosen vertex lies within distance s of v, and the
//                     whole subtree is dominated;
//   k + 1 + e, e < k  every subtree vertex not yet dominated lies within
//                     distance e of v (it must be served from outside).
// State i implies state i + 1.
DominationResult solve_tree(const Tree& t, int k, std::span<const Vertex> forced) {
  if (k < 1) throw std::invalid_argument("distance parameter k must be >= 1");
  const std::size_t n = t.order();
  const std::size_t width = 2 * static_cast<std::size_t>(k) + 1;
  const std::size_t top = width - 1;  // weakest state, index 2k

  std::vector<char> must_pick(n, 0);
  for (Vertex v : forced) must_pick.at(v) = 1;

  Rooting r = root_tree(t, 0);
  std::vector<Cost> best(n * width, kInfinity);
  std::vector<std::uint32_t> source(n * width, 0);
  std::vector<Vertex> pivot(n * (k + 1), Rooting::kNone);
  std::vector<Cost> direct(width);

  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    const auto children = r.children(v);
    const Cost* child_row = nullptr;
    auto row_of = [&](Vertex c) { return best.data() + c * width; };

    direct[0] = 1;
    for (Vertex c : children) direct[0] = add(direct[0], row_of(c)[top]);

    for (std::size_t s = 1; s <= static_cast<std::size_t>(k); ++s) {
      Cost base = 0;
      Cost extra = kInfinity;
      Vertex chosen = Rooting::kNone;
      for (Vertex c : children) {
        child_row = row_of(c);
        base = add(base, child_row[top - s]);
        Cost delta = child_row[s - 1] >= kInfinity ? kInfinity : child_row[s - 1] - child_row[top - s];
        if (delta < extra) {
          extra = delta;
          chosen = c;
        }
      }
      direct[s] = add(base, extra);
      pivot[v * (k + 1) + s] = chosen;
    }
    for (std::size_t e = 0; e < static_cast<std::size_t>(k); ++e) {
      Cost sum = 0;
      for (Vertex c : children) sum = add(sum, row_of(c)[k + e]);
      direct[k + 1 + e] = sum;
    }
    if (must_pick[v]) std::fill(direct.begin() + 1, direct.end(), kInfinity);

    Cost* row = best.data() + v * width;
    std::uint32_t* src = source.data() + v * width;
    row[0] = direct[0];
    src[0] = 0;
    for (std::size_t i = 1; i < width; ++i) {
      // On ties keep the option that does not pick v, pushing the chosen
      // vertices deeper.
      if (direct[i] <= row[i - 1]) {
        row[i] = direct[i];
        src[i] = static_cast<std::uint32_t>(i);
      } else {
        row[i] = row[i - 1];
        src[i] = src[i - 1];
      }
    }
  }

  DominationResult result;
  result.k = k;
  result.value = static_cast<std::size_t>(best[r.root * width + k]);

  std::vector<std::uint32_t> need(n, 0);
  need[r.root] = static_cast<std::uint32_t>(k);
  for (Vertex v : r.order) {
    const std::uint32_t j = source[v * width + need[v]];
    const auto children = r.children(v);
    if (j == 0) {
      result.witness.push_back(v);
      for (Vertex c : children) need[c] = static_cast<std::uint32_t>(top);
    } else if (j <= static_cast<std::uint32_t>(k)) {
      const Vertex chosen = pivot[v * (k + 1) + j];
      for (Vertex c : children) need[c] = static_cast<std::uint32_t>(c == chosen ? j - 1 : top - j);
    } else {
      const std::uint32_t e = j - static_cast<std::uint32_t>(k) - 1;
      for (Vertex c : children) need[c] = static_cast<std::uint32_t>(k) + e;
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

}  // namespace

bool is_distance_dominating(const Graph& g, std::span<const Vertex> set, int k) {
  const std::size_t n = g.order();
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s : set) {
    if (s >= n) return false;
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    if (dist[v] == k) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

DominationResult gamma_k_tree(const Tree& t, int k) { return solve_tree(t, k, {}); }

DominationResult gamma_forced(const Tree& t, std::span<const Vertex> forced) {
  return solve_tree(t, 1, forced);
}

DominationResult gamma_k_brute(const Graph& g, int k, std::size_t max_order) {
  if (k < 1) throw std::invalid_argument("distance parameter k must be >= 1");
  const std::size_t n = g.order();
  if (n > max_order || n > 32) {
    throw GuardRailError("brute-force domination refuses " + std::to_string(n) +
                         " vertices (limit " + std::to_string(std::min<std::size_t>(max_order, 32)) + ")");
  }
  DominationResult result;
  result.k = k;
  if (n == 0) return result;

  std::vector<std::uint32_t> ball(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex w = 0; w < n; ++w) {
      if (dist[w] != kUnreachable && dist[w] <= k) ball[v] |= std::uint32_t{1} << w;
    }
  }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      std::uint32_t covered = 0;
      for (Vertex v : pick) covered |= ball[v];
      if (covered == full) {
        result.value = size;
        result.witness = pick;
        return result;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;  // unreachable: V itself dominates
}

bool in_some_min_dominating_set(const Tree& t, Vertex v) {
  if (v >= t.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const Vertex forced[] = {v};
  return gamma_forced(t, forced).value == gamma_k_tree(t, 1).value;
}

bool leaf_drop_decrement(const Tree& t, Vertex v) {
  if (v >= t.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (!t.is_leaf(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
  const std::size_t gamma = gamma_k_tree(t, 1).value;
  if (t.order() == 1) return gamma == 1;
  const Vertex removed[] = {v};
  const auto rest = remove_vertices(t, removed);
  return gamma_k_tree(rest.tree, 1).value + 1 == gamma;
}

}  // namespace etdom
