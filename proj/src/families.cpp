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

#include "etdom/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "etdom/canonical.hpp"
#include "etdom/distance.hpp"
#include "etdom/domination.hpp"
#include "etdom/leaf_rank.hpp"

namespace etdom {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Rooted tree from a level sequence (root at level 1).
Tree tree_from_levels(const std::vector<int>& level) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at(level.size() + 2, 0);
  for (std::size_t i = 0; i < level.size(); ++i) {
    const int l = level[i];
    if (i > 0) edges.emplace_back(last_at[l - 1], static_cast<Vertex>(i));
    last_at[l] = static_cast<Vertex>(i);
  }
  return Tree(level.size(), edges);
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t max_order) {
  if (n == 0) throw std::invalid_argument("enumerate_trees: n must be positive");
  if (n > max_order)
    throw GuardRailError("enumerate_trees: n = " + std::to_string(n) + " exceeds limit " +
                         std::to_string(max_order));

  // Every rooted tree, as a canonical level sequence; then keep one per free
  // isomorphism class.
  std::set<std::string> codes;
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 1);
  while (true) {
    codes.insert(canonical_code(tree_from_levels(level)));
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }

  std::vector<Tree> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(tree_from_code(code));
  return out;
}

// ---------------------------------------------------------------------------
// Generators

Tree gen_spider_Tn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_spider_Tn: n must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto mid = static_cast<Vertex>(i);
    edges.emplace_back(0, mid);
    edges.emplace_back(mid, static_cast<Vertex>(n + 2 * i - 1));
    edges.emplace_back(mid, static_cast<Vertex>(n + 2 * i));
  }
  return Tree(3 * n + 1, edges);
}

Tree gen_T_Mk(const Tree& base, std::size_t k) {
  const std::size_t b = base.order();
  std::vector<Edge> edges = base.graph().edges();
  for (Vertex v = 0; v < b; ++v) {
    Vertex prev = v;
    for (std::size_t j = 0; j < k; ++j) {
      const auto w = static_cast<Vertex>(b + v * k + j);
      edges.emplace_back(prev, w);
      prev = w;
    }
  }
  return Tree(b * (k + 1), edges);
}

std::size_t unit_order(std::size_t k, std::size_t delta) {
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    layer *= (d == 1 ? delta : delta - 1);
    total += layer;
  }
  return total;
}

namespace {

// Edges of one unit in BFS numbering.
std::vector<Edge> unit_edges(std::size_t k, std::size_t delta) {
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::vector<Vertex> grown;
    for (Vertex v : frontier) {
      const std::size_t kids = (d == 1 ? delta : delta - 1);
      for (std::size_t c = 0; c < kids; ++c) {
        edges.emplace_back(v, next);
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return edges;
}

void check_unit_params(std::size_t k, std::size_t delta) {
  if (k % 2 == 0) throw std::invalid_argument("gen_T_mkD: k must be odd");
  if (delta < 2) throw std::invalid_argument("gen_T_mkD: delta must be at least 2");
}

}  // namespace

Tree gen_T_mkD(std::size_t k, std::size_t delta, std::size_t units, const std::vector<UnitJoin>& joins) {
  check_unit_params(k, delta);
  if (units == 0) throw std::invalid_argument("gen_T_mkD: need at least one unit");
  if (joins.size() != units - 1) throw std::invalid_argument("gen_T_mkD: joins must form a tree over the units");

  const std::size_t s = unit_order(k, delta);
  const std::vector<Edge> local = unit_edges(k, delta);
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(units * s, 0);
  for (std::size_t u = 0; u < units; ++u) {
    const auto off = static_cast<Vertex>(u * s);
    for (auto [a, b] : local) {
      edges.emplace_back(a + off, b + off);
      ++degree[a + off];
      ++degree[b + off];
    }
  }

  std::vector<std::size_t> uf(units);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& j : joins) {
    if (j.unit_a >= units || j.unit_b >= units || j.vertex_a >= s || j.vertex_b >= s)
      throw std::invalid_argument("gen_T_mkD: join refers to a missing unit or vertex");
    const std::size_t ra = find(j.unit_a);
    const std::size_t rb = find(j.unit_b);
    if (ra == rb) throw std::invalid_argument("gen_T_mkD: joins contain a cycle");
    uf[ra] = rb;
    const auto a = static_cast<Vertex>(j.unit_a * s + j.vertex_a);
    const auto b = static_cast<Vertex>(j.unit_b * s + j.vertex_b);
    if (degree[a] >= delta || degree[b] >= delta)
      throw std::invalid_argument("gen_T_mkD: join endpoint already has degree delta");
    ++degree[a];
    ++degree[b];
    edges.emplace_back(a, b);
  }
  return Tree(units * s, edges);
}

std::vector<UnitJoin> chain_joins(std::size_t k, std::size_t delta, std::size_t units) {
  check_unit_params(k, delta);
  const std::size_t s = unit_order(k, delta);
  std::vector<std::size_t> degree(s, 0);
  for (auto [a, b] : unit_edges(k, delta)) {
    ++degree[a];
    ++degree[b];
  }
  // The outgoing join uses the highest free vertex, the incoming one the
  // lowest free non-root vertex (the root when the unit is a single vertex).
  std::vector<UnitJoin> joins;
  for (std::size_t u = 0; u + 1 < units; ++u) {
    std::vector<std::size_t> deg_out = degree;
    if (u > 0) ++deg_out[joins.back().vertex_b];
    std::optional<Vertex> out;
    for (Vertex v = static_cast<Vertex>(s); v-- > 0;) {
      if (deg_out[v] < delta) {
        out = v;
        break;
      }
    }
    std::optional<Vertex> in;
    for (Vertex v = (s > 1 ? 1 : 0); v < s; ++v) {
      if (degree[v] < delta) {
        in = v;
        break;
      }
    }
    if (!out || !in) throw std::invalid_argument("chain_joins: unit has no vertex of degree below delta");
    joins.push_back({u, *out, u + 1, *in});
  }
  return joins;
}

// ---------------------------------------------------------------------------
// Traces

std::string family_name(Family f) {
  switch (f) {
    case Family::kScriptT: return "script-T";
    case Family::kBlackboardT: return "blackboard-T";
    case Family::kCritical: return "critical";
  }
  return "unknown";
}

Tree replay(const FamilyTrace& trace) {
  const std::size_t n = trace.order;
  std::vector<char> present(n, 0);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  auto check = [&](Vertex v) {
    if (v >= n) throw std::invalid_argument("replay: vertex out of range");
  };
  auto add_vertex = [&](Vertex v) {
    check(v);
    if (present[v]) throw std::invalid_argument("replay: vertex added twice");
    present[v] = 1;
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    edges.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
  };

  for (Vertex v : trace.base_vertices) add_vertex(v);
  for (auto [a, b] : trace.base_edges) {
    check(a);
    check(b);
    if (!present[a] || !present[b]) throw std::invalid_argument("replay: base edge leaves the base");
    add_edge(a, b);
  }

  for (const FamilyStep& st : trace.steps) {
    const Vertex a = st.attach;
    check(a);
    if (!present[a]) throw std::invalid_argument("replay: attachment vertex not present");
    const auto& x = st.added;
    const bool needs_leaf = st.operation != "star-by-leaf";
    if (needs_leaf && degree[a] > 1) throw std::invalid_argument("replay: attachment vertex is not a leaf");
    for (Vertex v : x) add_vertex(v);

    if (st.operation == "star-by-leaf") {
      if (st.params.size() != 1 || st.params[0] < 2 || x.size() != st.params[0] + 1)
        throw std::invalid_argument("replay: bad star-by-leaf step");
      add_edge(a, x[0]);
      add_edge(x[0], x[1]);
      for (std::size_t i = 2; i < x.size(); ++i) add_edge(x[1], x[i]);
    } else if (st.operation == "star-at-leaf") {
      if (st.params.size() != 2 || st.params[0] < 1 || st.params[1] < 1 ||
          x.size() != 1 + st.params[0] + st.params[1])
        throw std::invalid_argument("replay: bad star-at-leaf step");
      const std::size_t m = st.params[0];
      add_edge(a, x[0]);
      for (std::size_t i = 1; i <= m; ++i) add_edge(x[0], x[i]);
      for (std::size_t i = m + 1; i < x.size(); ++i) add_edge(a, x[i]);
    } else if (st.operation == "two-stars") {
      if (st.params.size() != 2 || st.params[0] < 1 || st.params[1] < 1 ||
          x.size() != 2 + st.params[0] + st.params[1])
        throw std::invalid_argument("replay: bad two-stars step");
      const std::size_t m = st.params[0];
      add_edge(a, x[0]);
      for (std::size_t i = 1; i <= m; ++i) add_edge(x[0], x[i]);
      add_edge(a, x[m + 1]);
      for (std::size_t i = m + 2; i < x.size(); ++i) add_edge(x[m + 1], x[i]);
    } else if (st.operation == "path-at-leaf") {
      if (x.size() != 3) throw std::invalid_argument("replay: bad path-at-leaf step");
      add_edge(a, x[0]);
      add_edge(x[0], x[1]);
      add_edge(x[1], x[2]);
    } else if (st.operation == "fork-at-leaf") {
      if (x.size() != 3) throw std::invalid_argument("replay: bad fork-at-leaf step");
      add_edge(a, x[0]);
      add_edge(x[0], x[1]);
      add_edge(a, x[2]);
    } else {
      throw std::invalid_argument("replay: unknown operation '" + st.operation + "'");
    }
  }
  if (std::find(present.begin(), present.end(), 0) != present.end())
    throw std::invalid_argument("replay: trace does not cover every vertex");
  return Tree(n, edges);
}

// ---------------------------------------------------------------------------
// Recognizers

namespace {

// A shrinking copy of the input tree that remembers original labels.
struct Working {
  Tree tree;
  std::vector<Vertex> orig;

  void remove(std::span<const Vertex> local) {
    SubTree sub = remove_vertices(tree, local);
    for (Vertex& v : sub.original) v = orig[v];
    tree = std::move(sub.tree);
    orig = std::move(sub.original);
  }
  std::vector<Vertex> to_orig(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(orig[v]);
    return out;
  }
};

Working start(const Tree& t) {
  std::vector<Vertex> id(t.order());
  std::iota(id.begin(), id.end(), 0);
  return {t, std::move(id)};
}

FamilyTrace finish(Family f, std::size_t order, const Working& w, std::vector<FamilyStep> peeled) {
  FamilyTrace trace;
  trace.family = f;
  trace.order = order;
  trace.base_vertices = w.orig;
  for (auto [a, b] : w.tree.graph().edges()) trace.base_edges.emplace_back(w.orig[a], w.orig[b]);
  std::reverse(peeled.begin(), peeled.end());
  trace.steps = std::move(peeled);
  return trace;
}

// The unique neighbour of v whose rank is not below v's, if any.
std::optional<Vertex> upper_neighbor(const Tree& t, const std::vector<int>& rank, Vertex v) {
  for (Vertex w : t.neighbors(v))
    if (rank[w] >= rank[v]) return w;
  return std::nullopt;
}

}  // namespace

Recognition recognize_script_T(const Tree& t) {
  Working w = start(t);
  std::vector<FamilyStep> peeled;
  while (tree_diameter(w.tree) > 3) {
    const Tree& cur = w.tree;
    const std::vector<int> rank = classify_t_leaves(cur);
    std::vector<Vertex> two_leaves;
    for (Vertex v = 0; v < cur.order(); ++v)
      if (rank[v] == 2) two_leaves.push_back(v);
    if (two_leaves.empty()) return {};

    // A 2-leaf whose closed closure is a star hanging by one of its leaves.
    bool done = false;
    for (Vertex v : two_leaves) {
      LeafClosure lc = leaf_closure(cur, rank, v);
      if (diameter(induced_subgraph(cur.graph(), lc.closed_set).graph) != 2) continue;
      const auto up = upper_neighbor(cur, rank, v);
      if (!up) break;
      Vertex center = 0;
      for (Vertex u : cur.neighbors(v))
        if (rank[u] < rank[v]) center = u;
      FamilyStep st{"star-by-leaf", w.orig[*up], {w.orig[v], w.orig[center]}, {lc.closed_set.size() - 1}};
      for (Vertex u : lc.open_set)
        if (u != center) st.added.push_back(w.orig[u]);
      peeled.push_back(std::move(st));
      w.remove(lc.closed_set);
      done = true;
      break;
    }
    if (done) continue;

    const Vertex v = two_leaves.front();
    std::vector<Vertex> stars;
    std::vector<Vertex> leaves;
    for (Vertex u : cur.neighbors(v)) {
      if (rank[u] == 1) stars.push_back(u);
      else if (rank[u] == 0) leaves.push_back(u);
    }
    auto star_part = [&](Vertex c, std::vector<Vertex>& out) {
      out.push_back(w.orig[c]);
      std::size_t m = 0;
      for (Vertex u : cur.neighbors(c)) {
        if (u == v) continue;
        out.push_back(w.orig[u]);
        ++m;
      }
      return m;
    };

    const LeafClosure lc = leaf_closure(cur, rank, v);
    FamilyStep st;
    st.attach = w.orig[v];
    if (stars.size() == 1 && !leaves.empty()) {
      st.operation = "star-at-leaf";
      const std::size_t m = star_part(stars[0], st.added);
      for (Vertex u : leaves) st.added.push_back(w.orig[u]);
      st.params = {m, leaves.size()};
    } else if (stars.size() == 2 && leaves.empty()) {
      st.operation = "two-stars";
      const std::size_t m = star_part(stars[0], st.added);
      const std::size_t m2 = star_part(stars[1], st.added);
      st.params = {m, m2};
    } else {
      return {};
    }

    const Vertex v_orig = w.orig[v];
    w.remove(lc.open_set);
    const Vertex v_new = static_cast<Vertex>(
        std::lower_bound(w.orig.begin(), w.orig.end(), v_orig) - w.orig.begin());
    const bool side = st.operation == "star-at-leaf" ? in_some_min_dominating_set(w.tree, v_new)
                                                      : leaf_drop_decrement(w.tree, v_new);
    if (!side) return {};
    peeled.push_back(std::move(st));
  }
  return {true, finish(Family::kScriptT, t.order(), w, std::move(peeled))};
}

bool recognize_bbT(const Tree& t) { return gamma_k_tree(t, 1).value == gamma_k_tree(t, 2).value; }

Recognition recognize_C(const Tree& t) {
  if (t.order() % 3 != 1) return {};
  Working w = start(t);
  std::vector<FamilyStep> peeled;
  while (w.tree.order() > 1) {
    const Tree& cur = w.tree;
    // Other neighbour of a degree-2 vertex.
    auto beyond = [&](Vertex mid, Vertex from) {
      const auto nb = cur.neighbors(mid);
      return nb[0] == from ? nb[1] : nb[0];
    };
    std::optional<FamilyStep> found;
    std::vector<Vertex> unit;
    for (Vertex x = 0; x < cur.order() && !found; ++x) {
      const std::size_t dx = cur.degree(x);
      // x - a - b - c with a, b of degree 2 and c a leaf; x keeps <= 1 edge.
      if (dx <= 2) {
        for (Vertex a : cur.neighbors(x)) {
          if (cur.degree(a) != 2) continue;
          const Vertex b = beyond(a, x);
          if (cur.degree(b) != 2) continue;
          const Vertex c = beyond(b, a);
          if (cur.degree(c) != 1) continue;
          unit = {a, b, c};
          found = FamilyStep{"path-at-leaf", w.orig[x], {w.orig[a], w.orig[b], w.orig[c]}, {}};
          break;
        }
      }
      if (found) break;
      // x - a - b with a of degree 2 and b a leaf, plus a leaf c at x.
      if (dx >= 2 && dx <= 3) {
        for (Vertex a : cur.neighbors(x)) {
          if (cur.degree(a) != 2) continue;
          const Vertex b = beyond(a, x);
          if (cur.degree(b) != 1) continue;
          for (Vertex c : cur.neighbors(x)) {
            if (c == a || cur.degree(c) != 1) continue;
            unit = {a, b, c};
            found = FamilyStep{"fork-at-leaf", w.orig[x], {w.orig[a], w.orig[b], w.orig[c]}, {}};
            break;
          }
          if (found) break;
        }
      }
    }
    if (!found) return {};
    peeled.push_back(std::move(*found));
    w.remove(unit);
  }
  return {true, finish(Family::kCritical, t.order(), w, std::move(peeled))};
}

}  // namespace etdom
