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

#ifndef ETDOM_ETERNAL_HPP
#define ETDOM_ETERNAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

/// Eternal distance-k domination number of a tree from its diameter alone:
/// 1 when d <= k, 2 when k < d < 2k, and nullopt when d >= 2k (no closed
/// form). Throws std::invalid_argument for d < 0 or k < 1.
std::optional<int> small_diameter_value(int d, int k);

/// One removal made by the linear-time stack procedure.
struct Removal {
  Vertex center = 0;
  std::vector<Vertex> removed;  // sorted
  bool with_center = false;     // whole subtree of center, or only below it
};

struct Algorithm1Result {
  std::size_t value = 0;
  std::vector<Removal> removals;
  std::vector<Vertex> residual;  // survivors, sorted; may be empty
};

/// Eternal distance-2 domination number of a tree in O(n).
///
/// Hangs the tree from `root` and keeps a stack starting at the root. The
/// top vertex x is examined by the height of its surviving subtree (in
/// edges): at height >= 3 its children of height >= 2 are pushed; at height
/// 2 it is popped, the count increases, and either the whole subtree of x
/// (x has one surviving child) or everything below x is deleted; otherwise
/// it is popped. One more is counted if anything survives. Heights are
/// refreshed only when a vertex returns to the top, so every vertex is
/// handled a constant number of times.
Algorithm1Result eternal2_algorithm1(const Tree& t, Vertex root = 0);

/// Shorthand for eternal2_algorithm1(t, 0).value.
std::size_t eternal2(const Tree& t);

struct ReductionStep {
  Vertex center = 0;             // the 2-leaf v
  std::vector<Vertex> removed;   // L[v] or L(v), sorted, original labels
  bool closed = false;           // true when L[v] was removed
  int increment = 1;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<Vertex> residual;  // original labels, sorted
  int residual_diameter = 0;
  int base_value = 0;
  std::size_t total = 0;
};

/// The same number by explicit 2-leaf reduction, in O(n^2).
///
/// While the diameter is at least 5, take the lowest-numbered vertex of
/// rank 2; if T[L[v]] has diameter 2 delete L[v], otherwise delete L(v),
/// and count one. The remaining tree of diameter d <= 4 contributes 1 if
/// d <= 2 and 2 otherwise.
ReductionTrace eternal2_by_reduction(const Tree& t);

struct Criticality {
  bool critical = false;
  std::optional<Vertex> witness;  // a leaf whose deletion keeps the value
};

/// True iff deleting any leaf lowers the eternal distance-2 domination
/// number. K1 counts as critical.
Criticality is_critical(const Tree& t);

}  // namespace etdom

#endif  // ETDOM_ETERNAL_HPP
