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

#ifndef ETDOM_VERIFY_HPP
#define ETDOM_VERIFY_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "etdom/graph.hpp"
#include "etdom/oracle.hpp"

namespace etdom {

inline constexpr int kReportSchemaVersion = 1;

/// Append-only store of expensive results keyed by (canonical graph6,
/// parameter, method). One tab-separated entry per line.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  std::optional<std::size_t> get(const std::string& graph6, const std::string& parameter,
                                 const std::string& method) const;
  void put(const std::string& graph6, const std::string& parameter, const std::string& method,
           std::size_t value);
  std::size_t size() const;

 private:
  static std::string key(const std::string& g, const std::string& p, const std::string& m);

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, std::size_t> entries_;
};

/// Everything computed for one tree of a corpus.
struct TreeRecord {
  std::string graph6;  // canonical
  std::size_t order = 0;
  int diameter = 0;
  std::size_t gamma = 0;
  std::size_t gamma2 = 0;
  std::map<int, std::size_t> gamma_k;       // every k in use and floor(k/2)
  std::size_t eternal2_algorithm1 = 0;
  std::size_t eternal2_reduction = 0;
  bool root_independent = true;
  std::map<int, std::size_t> oracle;        // game value at distance k, where computed
  std::map<int, std::size_t> power_oracle;  // game value of T^k at distance 1, where computed
  bool script_T = false;
  bool blackboard_T = false;
  bool critical_family = false;
  bool critical = false;
  bool stem_invariant = true;

  friend bool operator==(const TreeRecord&, const TreeRecord&) = default;
};

/// A single named instance whose value is compared with a known one.
struct InstanceCheck {
  std::string group;   // theorem it belongs to
  std::string label;   // e.g. "P7" or "spider n=3"
  std::string graph6;
  int k = 2;
  std::string method;  // "algorithm1", "oracle" or "gamma"
  std::size_t expected = 0;
  std::size_t value = 0;

  friend bool operator==(const InstanceCheck&, const InstanceCheck&) = default;
};

struct TheoremVerdict {
  std::string name;
  bool holds = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  // canonical graph6

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct VerificationReport {
  int schema_version = kReportSchemaVersion;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::vector<int> k_set;
  std::vector<TreeRecord> records;  // sorted by graph6
  std::vector<InstanceCheck> instances;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> notes;
  double seconds = 0.0;
  std::size_t jobs = 1;

  bool all_hold() const;
};

/// Corpus theorems (evaluated on records) followed by instance groups.
const std::vector<std::string>& theorem_names();

struct VerifyOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::vector<int> k_set{2};
  std::vector<std::string> theorems;  // empty selects every theorem
  std::size_t jobs = 1;
  ResultCache* cache = nullptr;
  OracleLimits limits;
  std::size_t power_max_order = 8;
};

/// Largest tree order on which the oracle runs automatically for distance k.
std::size_t oracle_order_limit(int k);

/// Computes one record. The oracle fields are filled for each k in `k_set`
/// (plus k = 2 when `with_oracle`) within oracle_order_limit, and the power
/// fields up to `power_max_order` vertices.
TreeRecord compute_record(const Tree& t, const std::vector<int>& k_set, bool with_oracle,
                          std::size_t power_max_order = 8, ResultCache* cache = nullptr,
                          const OracleLimits& limits = {});

/// Verdicts for the selected theorems, derived from records and instances
/// only. Throws std::invalid_argument for an unknown theorem name.
std::vector<TheoremVerdict> evaluate_theorems(const std::vector<TreeRecord>& records,
                                              const std::vector<InstanceCheck>& instances,
                                              const std::vector<std::string>& theorems);

/// Builds the instance checks belonging to the selected groups.
std::vector<InstanceCheck> run_instances(const std::vector<std::string>& theorems, ResultCache* cache = nullptr);

VerificationReport run_verification(const VerifyOptions& opts);

/// Recomputes the record (or instance) behind a counterexample from its
/// graph6 alone and reports whether the theorem still fails on it.
bool recheck_counterexample(const std::string& theorem, const std::string& graph6, const std::vector<int>& k_set);

/// Recomputes verdicts from the stored records and instances and compares
/// them with the stored verdicts; false verdicts must also recheck.
bool revalidate(const VerificationReport& report);

nlohmann::json to_json(const TreeRecord& r);
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// theorem,holds,checked,counterexamples
std::string verdicts_csv(const VerificationReport& report);

}  // namespace etdom

#endif  // ETDOM_VERIFY_HPP
