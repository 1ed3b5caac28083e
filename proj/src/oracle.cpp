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

#include "etdom/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "etdom/domination.hpp"

namespace etdom {
namespace {

// Decides perfect matchings between two guard multisets. The multisets are
// collapsed to distinct vertices with multiplicities and units of flow are
// pushed along augmenting paths; edges between groups are uncapacitated.
// Buffers are reused across queries.
class Matcher {
 public:
  Matcher(const DistanceMatrix& dist, int k) : dist_(dist), k_(k) {}

  bool operator()(std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("configs_compatible: configurations differ in size");
    collapse(a, av_, ac_);
    collapse(b, bv_, bc_);
    na_ = av_.size();
    nb_ = bv_.size();
    edge_.assign(na_ * nb_, 0);
    flow_.assign(na_ * nb_, 0);
    for (std::size_t i = 0; i < na_; ++i)
      for (std::size_t j = 0; j < nb_; ++j) {
        const int d = dist_(av_[i], bv_[j]);
        edge_[i * nb_ + j] = d != kUnreachable && d <= k_;
      }
    used_a_.assign(na_, 0);
    used_b_.assign(nb_, 0);
    for (std::size_t f = 0; f < a.size(); ++f)
      if (!augment()) return false;
    return true;
  }

 private:
  static void collapse(std::span<const Vertex> s, std::vector<Vertex>& v, std::vector<int>& c) {
    v.clear();
    c.clear();
    for (Vertex x : s) {
      if (!v.empty() && v.back() == x) {
        ++c.back();
      } else {
        v.push_back(x);
        c.push_back(1);
      }
    }
  }

  bool augment() {
    seen_a_.assign(na_, 0);
    seen_b_.assign(nb_, 0);
    for (std::size_t i = 0; i < na_; ++i) {
      if (used_a_[i] < ac_[i] && visit(i)) {
        ++used_a_[i];
        return true;
      }
    }
    return false;
  }

  bool visit(std::size_t i) {
    if (seen_a_[i]) return false;
    seen_a_[i] = 1;
    for (std::size_t j = 0; j < nb_; ++j) {
      if (!edge_[i * nb_ + j] || seen_b_[j]) continue;
      seen_b_[j] = 1;
      if (used_b_[j] < bc_[j]) {
        ++used_b_[j];
        ++flow_[i * nb_ + j];
        return true;
      }
      // Reroute a unit that already reaches j from another group.
      for (std::size_t i2 = 0; i2 < na_; ++i2) {
        if (flow_[i2 * nb_ + j] > 0 && visit(i2)) {
          --flow_[i2 * nb_ + j];
          ++flow_[i * nb_ + j];
          return true;
        }
      }
    }
    return false;
  }

  const DistanceMatrix& dist_;
  int k_;
  std::size_t na_ = 0, nb_ = 0;
  std::vector<Vertex> av_, bv_;
  std::vector<int> ac_, bc_, flow_, used_a_, used_b_;
  std::vector<char> edge_, seen_a_, seen_b_;
};

std::vector<GuardConfig> all_configs(std::size_t n, std::size_t m) {
  std::vector<GuardConfig> out;
  GuardConfig c(m, 0);
  while (true) {
    out.push_back(c);
    std::size_t i = m;
    while (i > 0 && c[i - 1] + 1 == n) --i;
    if (i == 0) break;
    const Vertex next = c[i - 1] + 1;
    for (std::size_t j = i - 1; j < m; ++j) c[j] = next;
  }
  return out;
}

void check_instance(const Graph& g, int k, std::size_t m, const OracleLimits& limits) {
  if (k < 1) throw std::invalid_argument("oracle: k must be at least 1");
  if (m < 1) throw std::invalid_argument("oracle: need at least one guard");
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("oracle: graph must be connected and non-empty");
  if (g.order() > limits.max_order || g.order() > 64)
    throw GuardRailError("oracle: " + std::to_string(g.order()) + " vertices exceeds limit " +
                         std::to_string(std::min<std::size_t>(limits.max_order, 64)));
  if (m > limits.max_guards)
    throw GuardRailError("oracle: " + std::to_string(m) + " guards exceeds limit " +
                         std::to_string(limits.max_guards));
}

}  // namespace

bool configs_compatible(const DistanceMatrix& dist, int k, std::span<const Vertex> a, std::span<const Vertex> b) {
  return Matcher(dist, k)(a, b);
}

bool configs_compatible(const Graph& g, int k, std::span<const Vertex> a, std::span<const Vertex> b) {
  return configs_compatible(DistanceMatrix(g), k, a, b);
}

FixedPoint solve_fixed_point(const Graph& g, int k, std::size_t m, const OracleLimits& limits) {
  check_instance(g, k, m, limits);
  const std::size_t n = g.order();
  const DistanceMatrix dist(g);
  const std::vector<GuardConfig> configs = all_configs(n, m);
  const std::size_t c = configs.size();

  std::vector<std::uint64_t> occupied(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (Vertex v : configs[i]) occupied[i] |= std::uint64_t{1} << v;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // Compatibility is symmetric; each pair is decided once.
  Matcher compatible(dist, k);
  std::vector<std::vector<std::uint32_t>> moves(c);
  for (std::size_t i = 0; i < c; ++i) {
    moves[i].push_back(static_cast<std::uint32_t>(i));
    for (std::size_t j = i + 1; j < c; ++j) {
      if (compatible(configs[i], configs[j])) {
        moves[i].push_back(static_cast<std::uint32_t>(j));
        moves[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  std::vector<char> alive(c, 1);
  std::vector<std::size_t> doomed;
  FixedPoint fp;
  while (true) {
    ++fp.sweeps;
    doomed.clear();
    for (std::size_t i = 0; i < c; ++i) {
      if (!alive[i]) continue;
      std::uint64_t reach = 0;
      for (std::uint32_t j : moves[i])
        if (alive[j]) reach |= occupied[j];
      if (reach != all) doomed.push_back(i);
    }
    if (doomed.empty()) break;
    for (std::size_t i : doomed) alive[i] = 0;
  }
  for (std::size_t i = 0; i < c; ++i)
    if (alive[i]) fp.winning.push_back(configs[i]);
  return fp;
}

OracleResult eternal_number_oracle(const Graph& g, int k, const OracleLimits& limits) {
  check_instance(g, k, 1, limits);
  const std::size_t n = g.order();
  const std::size_t low = gamma_k_brute(g, k, limits.max_order).value;
  const std::size_t high = k >= 2 ? gamma_k_brute(g, k / 2, limits.max_order).value : n;

  OracleResult res;
  res.k = k;
  for (std::size_t m = low; m <= high; ++m) {
    FixedPoint fp = solve_fixed_point(g, k, m, limits);
    res.sweeps.emplace_back(m, fp.sweeps);
    if (!fp.winning.empty()) {
      res.m_min = m;
      res.winning_configs = std::move(fp.winning);
      return res;
    }
  }
  throw std::logic_error("eternal_number_oracle: no winning configuration up to the upper bound");
}

Defense defend_interactively(const Graph& g, int k, const GuardConfig& start, std::span<const Vertex> attacks,
                             const OracleLimits& limits) {
  if (!std::is_sorted(start.begin(), start.end())) throw std::invalid_argument("defend_interactively: start must be sorted");
  for (Vertex v : start)
    if (v >= g.order()) throw std::out_of_range("defend_interactively: guard outside the graph");
  for (Vertex v : attacks)
    if (v >= g.order()) throw std::out_of_range("defend_interactively: attack outside the graph");

  const FixedPoint fp = solve_fixed_point(g, k, start.size(), limits);
  const DistanceMatrix dist(g);
  Matcher compatible(dist, k);
  Defense out;
  out.configs.push_back(start);
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    const GuardConfig& cur = out.configs.back();
    const GuardConfig* answer = nullptr;
    for (const GuardConfig& w : fp.winning) {
      if (!std::binary_search(w.begin(), w.end(), attacks[i])) continue;
      if (compatible(cur, w)) {
        answer = &w;
        break;
      }
    }
    if (!answer) {
      out.failed_at = i;
      break;
    }
    out.configs.push_back(*answer);
  }
  return out;
}

}  // namespace etdom
