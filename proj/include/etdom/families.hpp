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

#ifndef ETDOM_FAMILIES_HPP
#define ETDOM_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kEnumerateMaxOrder = 12;

/// One tree per isomorphism class of free trees on n vertices, ordered by
/// canonical code. Each tree is labeled canonically (see canonical_tree).
/// Throws std::invalid_argument for n = 0 and GuardRailError above
/// `max_order`.
std::vector<Tree> enumerate_trees(std::size_t n, std::size_t max_order = kEnumerateMaxOrder);

// ---------------------------------------------------------------------------
// Generators

/// Star K_{1,n} with two leaves added to every leaf: center 0, middle
/// vertices 1..n, and leaves n+2i-1, n+2i under middle vertex i.
Tree gen_spider_Tn(std::size_t n);

/// `base` with a pendant path of k new vertices hung from every base vertex.
/// Base vertex v keeps its label; its path is b + v*k, ..., b + v*k + k - 1
/// (b = |V(base)|), the first of which is adjacent to v.
Tree gen_T_Mk(const Tree& base, std::size_t k);

/// Edge between vertex `vertex_a` of unit `unit_a` and vertex `vertex_b` of
/// unit `unit_b` (vertex numbers are local to a unit).
struct UnitJoin {
  std::size_t unit_a = 0;
  Vertex vertex_a = 0;
  std::size_t unit_b = 0;
  Vertex vertex_b = 0;
};

/// Vertex count of one unit: a root with `delta` children, every other
/// internal vertex with delta - 1 children, depth floor(k/2).
std::size_t unit_order(std::size_t k, std::size_t delta);

/// `units` disjoint copies of the unit tree for odd k, joined by `joins`.
/// Unit u occupies the labels [u*s, (u+1)*s) in BFS order, root first.
/// Throws std::invalid_argument when k is even, delta < 2, a join endpoint
/// already has degree delta, or the joins do not connect the units into a
/// tree.
Tree gen_T_mkD(std::size_t k, std::size_t delta, std::size_t units, const std::vector<UnitJoin>& joins);

/// Joins that chain unit i to unit i + 1, using the highest-numbered vertex
/// of unit i with spare degree and the lowest-numbered non-root vertex of
/// unit i + 1 with spare degree.
std::vector<UnitJoin> chain_joins(std::size_t k, std::size_t delta, std::size_t units);

// ---------------------------------------------------------------------------
// Recognizers

enum class Family { kScriptT, kBlackboardT, kCritical };

std::string family_name(Family f);

/// One construction step. All labels refer to the recognized tree.
///
/// Operations and the edges they add (a = attach, x = added):
///   "star-by-leaf"     x[0] is a star leaf joined to a, x[1] the star center,
///                      x[2..] its other leaves.                params {m}
///   "star-at-leaf"     a must be a leaf; x[0] is a star center joined to a,
///                      x[1..m] its leaves, x[m+1..] leaves of a.  params {m, t}
///   "two-stars"        a must be a leaf; x[0] center joined to a with leaves
///                      x[1..m], then the second center and its leaves.
///                                                              params {m, m2}
///   "path-at-leaf"     a must be a leaf; path a - x[0] - x[1] - x[2].
///   "fork-at-leaf"     a must be a leaf; path a - x[0] - x[1] and leaf x[2].
struct FamilyStep {
  std::string operation;
  Vertex attach = 0;
  std::vector<Vertex> added;
  std::vector<std::size_t> params;
};

/// Construction of a tree from a base tree. Steps are in construction order.
struct FamilyTrace {
  Family family = Family::kScriptT;
  std::size_t order = 0;               // vertex count of the final tree
  std::vector<Vertex> base_vertices;   // sorted
  std::vector<Edge> base_edges;
  std::vector<FamilyStep> steps;
};

/// Rebuilds the tree a trace describes, checking every step's attachment
/// precondition. Throws std::invalid_argument on a malformed trace.
Tree replay(const FamilyTrace& trace);

struct Recognition {
  bool member = false;
  std::optional<FamilyTrace> trace;  // set when member
};

/// Membership in the family grown from trees of diameter at most 3 by the
/// star and two-star attachments listed under FamilyStep, checked by
/// peeling those attachments off the tree.
Recognition recognize_script_T(const Tree& t);

/// gamma(T) == gamma_2(T).
bool recognize_bbT(const Tree& t);

/// Membership in the family of trees obtained from K1 by repeatedly gluing
/// a P4 onto a leaf (either at an end of the P4 or at an inner vertex).
Recognition recognize_C(const Tree& t);

}  // namespace etdom

#endif  // ETDOM_FAMILIES_HPP
