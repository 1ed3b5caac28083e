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

// Test-only reference computations. Nothing here calls into the library's
// algorithms; they only share the Graph container.

#ifndef ETDOM_TESTS_SUPPORT_ORACLES_HPP
#define ETDOM_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "etdom/graph.hpp"

namespace oracle {

using etdom::Edge;
using etdom::Graph;
using etdom::Vertex;

constexpr int kFar = 1 << 20;

// Floyd-Warshall distance table.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (const auto& row : all_pairs(g))
    for (int x : row) best = std::max(best, x);
  return best;
}

// Minimum |S| over all 2^n subsets (optionally containing `required`) such
// that every vertex is within k of S.
inline std::size_t min_distance_dominating(const Graph& g, int k, std::uint32_t required = 0) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  auto d = all_pairs(g);
  std::vector<std::uint32_t> ball(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (d[v][w] <= k) ball[v] |= 1u << w;
  const std::uint32_t full = (1u << n) - 1;
  std::size_t best = n;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if ((s & required) != required) continue;
    std::uint32_t cover = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1u) cover |= ball[v];
    if (cover == full) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Hand-rolled graph6 decoder for small graphs (n <= 62).
inline bool decode_graph6(const std::string& s, std::size_t& n, std::set<Edge>& edges) {
  if (s.empty()) return false;
  n = static_cast<unsigned char>(s[0]) - 63;
  if (n > 62) return false;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    int x = static_cast<unsigned char>(s[i]) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(x >> b & 1);
  }
  std::size_t idx = 0;
  edges.clear();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (idx >= bits.size()) return false;
      if (bits[idx++]) edges.insert({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  return true;
}

// Minimum over all roots of the AHU parenthesis string. No centering, so it
// is computed differently from the library's canonical form.
inline std::string min_root_code(const Graph& g) {
  std::function<std::string(Vertex, Vertex)> code = [&](Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : g.neighbors(v))
      if (w != parent) kids.push_back(code(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
  };
  std::string best;
  for (Vertex r = 0; r < g.order(); ++r) {
    std::string c = code(r, static_cast<Vertex>(-1));
    if (best.empty() || c < best) best = c;
  }
  return best;
}

// All labeled trees on n vertices via Prufer sequences, deduplicated by
// min_root_code. Returns one representative per class.
inline std::vector<Graph> naive_free_trees(std::size_t n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1, std::vector<Edge>{}));
    return out;
  }
  if (n == 2) {
    out.push_back(Graph(2, {{0, 1}}));
    return out;
  }
  std::set<std::string> seen;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (Vertex x : seq) ++degree[x];
    std::vector<Edge> edges;
    std::vector<int> deg = degree;
    for (Vertex x : seq) {
      Vertex leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    Graph g(n, edges);
    if (seen.insert(min_root_code(g)).second) out.push_back(g);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

// Eternal distance-k domination number by a direct game solve: guard
// multisets as sorted vectors, moves checked by trying every pairing of old
// and new guards, and the winning set shrunk until stable. Tiny inputs only.
inline std::size_t eternal_game_value(const Graph& g, int k) {
  const std::size_t n = g.order();
  auto d = all_pairs(g);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::vector<Vertex>> configs;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> gen = [&](Vertex from) {
      if (cur.size() == m) {
        configs.push_back(cur);
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        cur.push_back(v);
        gen(v);
        cur.pop_back();
      }
    };
    gen(0);
    auto move_ok = [&](const std::vector<Vertex>& a, std::vector<Vertex> b) {
      do {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) ok = d[a[i]][b[i]] <= k;
        if (ok) return true;
      } while (std::next_permutation(b.begin(), b.end()));
      return false;
    };
    std::vector<char> alive(configs.size(), 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < configs.size(); ++i) {
        if (!alive[i]) continue;
        for (Vertex r = 0; r < n && alive[i]; ++r) {
          bool answered = false;
          for (std::size_t j = 0; j < configs.size() && !answered; ++j) {
            if (!alive[j]) continue;
            if (std::find(configs[j].begin(), configs[j].end(), r) == configs[j].end()) continue;
            answered = move_ok(configs[i], configs[j]);
          }
          if (!answered) {
            alive[i] = 0;
            changed = true;
          }
        }
      }
    }
    if (std::find(alive.begin(), alive.end(), 1) != alive.end()) return m;
  }
  return n;
}

// Codes (min_root_code) of every tree built from K1 by at most `steps`
// gluings of a P4 onto a leaf, trying each of the four P4 vertices.
inline std::set<std::string> p4_sum_family(int steps) {
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  std::set<std::string> all{min_root_code(level[0])};
  for (int s = 0; s < steps; ++s) {
    std::vector<Graph> next;
    for (const Graph& g : level) {
      const auto n = static_cast<Vertex>(g.order());
      for (Vertex l = 0; l < n; ++l) {
        if (g.degree(l) > 1) continue;
        for (int pos = 0; pos < 4; ++pos) {
          std::vector<Edge> e = g.edges();
          Vertex ids[4];
          Vertex fresh = n;
          for (int i = 0; i < 4; ++i) ids[i] = i == pos ? l : fresh++;
          for (int i = 0; i < 3; ++i) e.emplace_back(ids[i], ids[i + 1]);
          Graph h(fresh, e);
          if (all.insert(min_root_code(h)).second) next.push_back(h);
        }
      }
    }
    level = std::move(next);
  }
  return all;
}

}  // namespace oracle

#endif  // ETDOM_TESTS_SUPPORT_ORACLES_HPP
