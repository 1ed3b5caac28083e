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

#ifndef ETDOM_ORACLE_HPP
#define ETDOM_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "etdom/distance.hpp"
#include "etdom/graph.hpp"

namespace etdom {

/// Guard positions as a sorted multiset; several guards may share a vertex.
using GuardConfig = std::vector<Vertex>;

/// Size limits for the exhaustive game solver. The state space has
/// C(n + m - 1, m) configurations and the solver compares them pairwise.
struct OracleLimits {
  std::size_t max_order = 12;
  std::size_t max_guards = 5;
};

/// True iff the guards at `a` can move to `b` with every guard travelling
/// at most k (staying put allowed), i.e. the bipartite "within k" graph
/// between the two multisets has a perfect matching. Throws
/// std::invalid_argument when the sizes differ.
bool configs_compatible(const DistanceMatrix& dist, int k, std::span<const Vertex> a, std::span<const Vertex> b);
bool configs_compatible(const Graph& g, int k, std::span<const Vertex> a, std::span<const Vertex> b);

struct FixedPoint {
  std::vector<GuardConfig> winning;  // lexicographic order
  std::size_t sweeps = 0;
};

/// Greatest set W of m-guard configurations such that from every member,
/// every attacked vertex can be answered by moving to a member of W that
/// occupies it. Starts from all configurations and deletes violators sweep
/// by sweep until nothing changes. Throws GuardRailError outside `limits`
/// and std::invalid_argument for a disconnected graph, k < 1 or m < 1.
FixedPoint solve_fixed_point(const Graph& g, int k, std::size_t m, const OracleLimits& limits = {});

struct OracleResult {
  int k = 1;
  std::size_t m_min = 0;
  std::vector<GuardConfig> winning_configs;                  // at m_min
  std::vector<std::pair<std::size_t, std::size_t>> sweeps;   // (m, sweeps) per m tried
};

/// Eternal distance-k domination number by trying m = gamma_k(g), gamma_k(g)
/// + 1, ... up to gamma_{floor(k/2)}(g) (n when k = 1). Throws
/// GuardRailError outside `limits`.
OracleResult eternal_number_oracle(const Graph& g, int k, const OracleLimits& limits = {});

struct Defense {
  std::vector<GuardConfig> configs;     // start, then one per defended attack
  std::optional<std::size_t> failed_at; // index of the first undefended attack
};

/// Plays `attacks` against guards starting at `start`. Each answer is the
/// lexicographically smallest winning configuration that contains the
/// attacked vertex and is reachable in one move.
Defense defend_interactively(const Graph& g, int k, const GuardConfig& start, std::span<const Vertex> attacks,
                             const OracleLimits& limits = {});

}  // namespace etdom

#endif  // ETDOM_ORACLE_HPP
