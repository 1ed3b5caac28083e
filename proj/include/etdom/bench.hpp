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

#ifndef ETDOM_BENCH_HPP
#define ETDOM_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

/// Largest tree the benchmark will build.
inline constexpr std::size_t kBenchMaxOrder = 10'000'000;

/// Random attachment tree: vertex v >= 1 gets parent rng() % v. The
/// generator is std::mt19937_64, so a seed fixes the tree exactly.
Tree random_attachment_tree(std::size_t n, std::mt19937_64& rng);

struct BenchRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_ns_per_vertex = 0.0;
  double max_seconds = 0.0;  // slowest single run
  std::size_t last_value = 0;
};

/// Times eternal2_algorithm1 on fresh random trees; generation is not timed.
/// Sizes are processed in the order given from one generator seeded with
/// `seed`. trials == 0 yields no rows. Throws GuardRailError above
/// kBenchMaxOrder and std::invalid_argument for a zero size.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed);

/// n,trials,mean_ns_per_vertex,max_seconds,last_value
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace etdom

#endif  // ETDOM_BENCH_HPP
