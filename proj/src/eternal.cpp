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

#include "etdom/eternal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "etdom/distance.hpp"
#include "etdom/leaf_rank.hpp"

namespace etdom {

std::optional<int> small_diameter_value(int d, int k) {
  if (d < 0 || k < 1) throw std::invalid_argument("small_diameter_value: need d >= 0 and k >= 1");
  if (d <= k) return 1;
  if (d < 2 * k) return 2;
  return std::nullopt;
}

Algorithm1Result eternal2_algorithm1(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  if (root >= n) throw std::out_of_range("eternal2_algorithm1: root out of range");
  const Rooting r = root_tree(t, root);

  std::vector<char> removed(n, 0);
  std::vector<int> height(n, 0);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    if (r.parent[v] != Rooting::kNone) height[r.parent[v]] = std::max(height[r.parent[v]], height[v] + 1);
  }

  Algorithm1Result res;
  std::vector<Vertex> stack{root};
  std::vector<Vertex> walk;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    int h = 0;
    std::size_t live_children = 0;
    for (Vertex c : r.children(x)) {
      if (removed[c]) continue;
      ++live_children;
      h = std::max(h, height[c] + 1);
    }
    height[x] = h;

    if (h >= 3) {
      for (Vertex c : r.children(x))
        if (!removed[c] && height[c] >= 2) stack.push_back(c);
      continue;
    }
    stack.pop_back();
    if (h != 2) continue;

    ++res.value;
    Removal rem;
    rem.center = x;
    rem.with_center = live_children == 1;
    walk.clear();
    if (rem.with_center) {
      walk.push_back(x);
    } else {
      for (Vertex c : r.children(x))
        if (!removed[c]) walk.push_back(c);
    }
    while (!walk.empty()) {
      const Vertex v = walk.back();
      walk.pop_back();
      removed[v] = 1;
      rem.removed.push_back(v);
      for (Vertex c : r.children(v))
        if (!removed[c]) walk.push_back(c);
    }
    height[x] = 0;
    std::sort(rem.removed.begin(), rem.removed.end());
    res.removals.push_back(std::move(rem));
  }

  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) res.residual.push_back(v);
  if (!res.residual.empty()) ++res.value;
  return res;
}

std::size_t eternal2(const Tree& t) { return eternal2_algorithm1(t, 0).value; }

ReductionTrace eternal2_by_reduction(const Tree& t) {
  ReductionTrace trace;
  Tree cur = t;
  std::vector<Vertex> orig(t.order());
  std::iota(orig.begin(), orig.end(), 0);

  int d = tree_diameter(cur);
  while (d >= 5) {
    const std::vector<int> rank = classify_t_leaves(cur);
    const auto it = std::find(rank.begin(), rank.end(), 2);
    if (it == rank.end()) throw std::logic_error("eternal2_by_reduction: no 2-leaf in a tree of diameter >= 5");
    const auto v = static_cast<Vertex>(it - rank.begin());
    const LeafClosure lc = leaf_closure(cur, rank, v);

    ReductionStep step;
    step.center = orig[v];
    step.closed = diameter(induced_subgraph(cur.graph(), lc.closed_set).graph) == 2;
    const std::vector<Vertex>& drop = step.closed ? lc.closed_set : lc.open_set;
    for (Vertex u : drop) step.removed.push_back(orig[u]);

    SubTree sub = remove_vertices(cur, drop);
    for (Vertex& u : sub.original) u = orig[u];
    cur = std::move(sub.tree);
    orig = std::move(sub.original);
    trace.steps.push_back(std::move(step));
    d = tree_diameter(cur);
  }

  trace.residual = orig;
  trace.residual_diameter = d;
  // Diameter 4 is outside the closed form but has value 2.
  trace.base_value = d <= 2 ? 1 : 2;
  trace.total = trace.steps.size() + static_cast<std::size_t>(trace.base_value);
  return trace;
}

Criticality is_critical(const Tree& t) {
  if (t.order() == 1) return {true, std::nullopt};
  const std::size_t value = eternal2(t);
  for (Vertex v : t.leaves()) {
    const Vertex drop[] = {v};
    if (eternal2(remove_vertices(t, drop).tree) >= value) return {false, v};
  }
  return {true, std::nullopt};
}

}  // namespace etdom
