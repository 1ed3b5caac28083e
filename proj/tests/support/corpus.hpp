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

#ifndef ETDOM_TESTS_SUPPORT_CORPUS_HPP
#define ETDOM_TESTS_SUPPORT_CORPUS_HPP

#include <deque>
#include <random>
#include <vector>

#include "etdom/families.hpp"
#include "etdom/graph.hpp"

namespace corpus {

// All non-isomorphic trees on 1..n_max vertices. The enumerator itself is
// checked against the naive oracle in test_families.cpp.
inline const std::vector<etdom::Tree>& trees_up_to(std::size_t n_max) {
  static std::deque<std::vector<etdom::Tree>> cache;
  while (cache.size() < n_max) {
    cache.push_back(cache.empty() ? std::vector<etdom::Tree>{} : cache.back());
    for (auto& t : etdom::enumerate_trees(cache.size())) cache.back().push_back(t);
  }
  return cache[n_max - 1];
}

inline etdom::Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<etdom::Edge> edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.emplace_back(static_cast<etdom::Vertex>(rng() % v), static_cast<etdom::Vertex>(v));
  return etdom::Tree(n, edges);
}

}  // namespace corpus

#endif  // ETDOM_TESTS_SUPPORT_CORPUS_HPP
