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

#include "etdom/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "etdom/eternal.hpp"

namespace etdom {

Tree random_attachment_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_attachment_tree: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), static_cast<Vertex>(v));
  return Tree(n, edges);
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed) {
  for (std::size_t n : sizes) {
    if (n == 0) throw std::invalid_argument("bench: sizes must be positive");
    if (n > kBenchMaxOrder)
      throw GuardRailError("bench: size " + std::to_string(n) + " exceeds " + std::to_string(kBenchMaxOrder));
  }
  std::vector<BenchRow> rows;
  if (trials == 0) return rows;
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    BenchRow row{n, trials, 0.0, 0.0, 0};
    double total_ns = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      const Tree t = random_attachment_tree(n, rng);
      const auto start = std::chrono::steady_clock::now();
      row.last_value = eternal2_algorithm1(t, 0).value;
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      total_ns += took.count() * 1e9;
      row.max_seconds = std::max(row.max_seconds, took.count());
    }
    row.mean_ns_per_vertex = total_ns / static_cast<double>(trials) / static_cast<double>(n);
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,trials,mean_ns_per_vertex,max_seconds,last_value\n";
  for (const BenchRow& r : rows)
    out << r.n << ',' << r.trials << ',' << r.mean_ns_per_vertex << ',' << r.max_seconds << ',' << r.last_value << '\n';
  return out.str();
}

}  // namespace etdom
