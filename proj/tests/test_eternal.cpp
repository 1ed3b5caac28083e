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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "etdom/canonical.hpp"
#include "etdom/distance.hpp"
#include "etdom/domination.hpp"
#include "etdom/eternal.hpp"
#include "etdom/families.hpp"
#include "etdom/leaf_rank.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace etdom;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// K_{1,3} with every edge subdivided.
Tree spider_legs_two() { return Tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

}  // namespace

TEST_CASE("small_diameter_value") {
  CHECK(small_diameter_value(2, 2) == 1);
  CHECK(small_diameter_value(3, 2) == 2);
  CHECK_FALSE(small_diameter_value(4, 2).has_value());
  CHECK(small_diameter_value(0, 1) == 1);
  CHECK_FALSE(small_diameter_value(2, 1).has_value());
  CHECK(small_diameter_value(5, 3) == 2);
  CHECK_FALSE(small_diameter_value(6, 3).has_value());
  CHECK_THROWS_AS(small_diameter_value(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(small_diameter_value(1, 0), std::invalid_argument);
}

TEST_CASE("eternal2_algorithm1 examples") {
  REQUIRE(oracle::eternal_game_value(path_graph(7), 2) == 3);
  CHECK(eternal2_algorithm1(Tree(path_graph(7)), 0).value == 3);
  CHECK(eternal2_algorithm1(Tree(1, {}), 0).value == 1);
  CHECK(eternal2(gen_spider_Tn(3)) == 2);
  CHECK(eternal2(Tree(star_graph(4))) == 1);
  CHECK(eternal2(spider_legs_two()) == 2);
  CHECK_THROWS_AS(eternal2_algorithm1(Tree(path_graph(3)), 3), std::out_of_range);

  // P5 from the center: one removal below the center, then the center.
  const auto p5 = eternal2_algorithm1(Tree(path_graph(5)), 2);
  CHECK(p5.value == 2);
  REQUIRE(p5.removals.size() == 1);
  CHECK(p5.removals[0].center == 2);
  CHECK_FALSE(p5.removals[0].with_center);
  CHECK(p5.removals[0].removed == std::vector<Vertex>{0, 1, 3, 4});
  CHECK(p5.residual == std::vector<Vertex>{2});
}

TEST_CASE("paths take ceil(n/3) guards from every root") {
  for (std::size_t n = 1; n <= 30; ++n) {
    const Tree p(path_graph(n));
    for (Vertex r = 0; r < n; ++r) CHECK(eternal2_algorithm1(p, r).value == ceil_div(n, 3));
  }
}

TEST_CASE("algorithm1 does not depend on the root") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const std::size_t v = eternal2(t);
    for (Vertex r = 1; r < t.order(); ++r) CHECK(eternal2_algorithm1(t, r).value == v);
  }
}

TEST_CASE("algorithm1 removals partition the tree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Tree t = corpus::random_tree(20 + rng() % 200, rng);
    const auto res = eternal2_algorithm1(t, static_cast<Vertex>(rng() % t.order()));
    std::vector<int> hits(t.order(), 0);
    for (const auto& rem : res.removals)
      for (Vertex v : rem.removed) ++hits[v];
    for (Vertex v : res.residual) ++hits[v];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(res.value == res.removals.size() + (res.residual.empty() ? 0 : 1));
  }
}

TEST_CASE("eternal2_by_reduction examples") {
  const ReductionTrace p7 = eternal2_by_reduction(Tree(path_graph(7)));
  REQUIRE(p7.steps.size() == 1);
  CHECK(p7.steps[0].center == 2);
  CHECK(p7.steps[0].closed);
  CHECK(p7.steps[0].removed == std::vector<Vertex>{0, 1, 2});
  CHECK(p7.residual == std::vector<Vertex>{3, 4, 5, 6});
  CHECK(p7.residual_diameter == 3);
  CHECK(p7.base_value == 2);
  CHECK(p7.total == 3);

  const ReductionTrace d4 = eternal2_by_reduction(spider_legs_two());
  CHECK(d4.steps.empty());
  CHECK(d4.total == 2);

  const ReductionTrace star = eternal2_by_reduction(Tree(star_graph(4)));
  CHECK(star.steps.empty());
  CHECK(star.total == 1);

  const ReductionTrace spider = eternal2_by_reduction(gen_spider_Tn(3));
  CHECK(spider.steps.empty());
  CHECK(spider.total == 2);

  // P8: the 2-leaf v2 has L[v2] = {v0, v1, v2}, a star hanging by v2.
  const ReductionTrace p8 = eternal2_by_reduction(Tree(path_graph(8)));
  REQUIRE(p8.steps.size() == 1);
  CHECK(p8.steps[0].removed == std::vector<Vertex>{0, 1, 2});
  CHECK(p8.total == 3);
}

TEST_CASE("reduction trace invariants and agreement with algorithm1") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const ReductionTrace tr = eternal2_by_reduction(t);
    CHECK(tr.total == eternal2(t));
    CHECK(tr.total == tr.steps.size() + static_cast<std::size_t>(tr.base_value));
    std::vector<int> hits(t.order(), 0);
    for (const auto& st : tr.steps) {
      CHECK(st.increment == 1);
      CHECK(std::binary_search(st.removed.begin(), st.removed.end(), st.center) == st.closed);
      for (Vertex v : st.removed) ++hits[v];
    }
    for (Vertex v : tr.residual) ++hits[v];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(tr.residual_diameter <= 4);
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Tree t = corpus::random_tree(50 + rng() % 300, rng);
    CHECK(eternal2_by_reduction(t).total == eternal2(t));
  }
}

TEST_CASE("first reduction step removes a leaf closure of its center") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const ReductionTrace tr = eternal2_by_reduction(t);
    if (tr.steps.empty()) continue;
    const auto& st = tr.steps.front();
    const LeafClosure lc = leaf_closure(t, st.center);
    CHECK(lc.rank == 2);
    CHECK(st.removed == (st.closed ? lc.closed_set : lc.open_set));
  }
}

TEST_CASE("a stem with two leaves keeps its value when one leaf goes") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const std::size_t v = eternal2(t);
    for (Vertex s = 0; s < t.order(); ++s) {
      std::vector<Vertex> leaves;
      for (Vertex w : t.neighbors(s))
        if (t.degree(w) == 1) leaves.push_back(w);
      if (leaves.size() < 2 || t.order() < 3) continue;
      const Vertex drop[] = {leaves[0]};
      CHECK(eternal2(remove_vertices(t, drop).tree) == v);
    }
  }
}

TEST_CASE("gamma_2 <= eternal value <= gamma and the ceil(n/3) bound") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const std::size_t v = eternal2(t);
    CHECK(gamma_k_tree(t, 2).value <= v);
    CHECK(v <= gamma_k_tree(t, 1).value);
    CHECK(v <= ceil_div(t.order(), 3));
  }
}

TEST_CASE("is_critical") {
  CHECK(is_critical(Tree(1, {})).critical);
  CHECK(is_critical(Tree(path_graph(4))).critical);
  CHECK(is_critical(Tree(path_graph(7))).critical);
  const Criticality p3 = is_critical(Tree(path_graph(3)));
  CHECK_FALSE(p3.critical);
  REQUIRE(p3.witness);
  CHECK(*p3.witness == 0);
  CHECK_FALSE(is_critical(Tree(star_graph(3))).critical);
}

TEST_CASE("recognize_C accepts exactly the trees built by P4 gluing") {
  const std::set<std::string> family = oracle::p4_sum_family(3);
  for (const Tree& t : corpus::trees_up_to(10))
    CHECK_MESSAGE(recognize_C(t).member == (family.count(oracle::min_root_code(t.graph())) == 1), canonical_code(t));
  // Every member is critical.
  for (const Tree& t : corpus::trees_up_to(10))
    if (recognize_C(t).member) CHECK(is_critical(t).critical);
}

TEST_CASE("critical trees outside the P4-gluing family") {
  // Three legs of length 3 at one vertex: removing any leg leaves P7 with
  // the glue point in its middle, so no gluing sequence ends here. Values
  // confirmed by the independent game solver.
  const Tree spider(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  REQUIRE(oracle::eternal_game_value(spider.graph(), 2) == 4);
  const Vertex leaf[] = {3};
  REQUIRE(oracle::eternal_game_value(remove_vertices(spider, leaf).tree.graph(), 2) == 3);
  CHECK(eternal2(spider) == 4);
  CHECK(is_critical(spider).critical);
  CHECK_FALSE(recognize_C(spider).member);
}

TEST_CASE("structural script-T recognizer agrees with gamma") {
  for (const Tree& t : corpus::trees_up_to(10)) {
    const std::size_t v = eternal2(t);
    const std::size_t g1 = gamma_k_tree(t, 1).value;
    const std::size_t g2 = gamma_k_tree(t, 2).value;
    CHECK_MESSAGE(recognize_script_T(t).member == (v == g1), canonical_code(t));
    CHECK((v == g2) == (g1 == g2));
  }
}

TEST_CASE("algorithm1 on a million-vertex tree") {
  std::mt19937_64 rng(3);
  const Tree t = corpus::random_tree(1000000, rng);
  const auto res = eternal2_algorithm1(t, 0);
  CHECK(res.value >= gamma_k_tree(t, 2).value);
  CHECK(res.value <= gamma_k_tree(t, 1).value);
}
