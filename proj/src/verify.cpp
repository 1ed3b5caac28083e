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

#include "etdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "etdom/canonical.hpp"
#include "etdom/distance.hpp"
#include "etdom/domination.hpp"
#include "etdom/eternal.hpp"
#include "etdom/families.hpp"
#include "etdom/graph_io.hpp"

namespace etdom {

// ---------------------------------------------------------------------------
// Cache

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string g, p, m;
    std::size_t v = 0;
    if (std::getline(fields, g, '\t') && std::getline(fields, p, '\t') && std::getline(fields, m, '\t') &&
        (fields >> v))
      entries_[key(g, p, m)] = v;
  }
}

std::string ResultCache::key(const std::string& g, const std::string& p, const std::string& m) {
  return g + '\t' + p + '\t' + m;
}

std::optional<std::size_t> ResultCache::get(const std::string& graph6, const std::string& parameter,
                                            const std::string& method) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key(graph6, parameter, method));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& graph6, const std::string& parameter, const std::string& method,
                      std::size_t value) {
  std::lock_guard lock(mu_);
  const std::string k = key(graph6, parameter, method);
  if (entries_.count(k)) return;
  entries_[k] = value;
  std::ofstream out(path_, std::ios::app);
  out << k << '\t' << value << '\n';
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

// ---------------------------------------------------------------------------
// Records

bool VerificationReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.holds; });
}

namespace {

const std::vector<std::string> kCorpusTheorems = {
    "sandwich",         "upper-bound", "triple-agreement",          "root-independence",
    "script-T",         "gamma2-characterization", "critical-characterization", "stem-invariance",
    "oracle-sandwich",  "power-graph-identity",
};
const std::vector<std::string> kInstanceGroups = {"path-formula", "spider", "extremal-families"};

bool is_instance_group(const std::string& name) {
  return std::find(kInstanceGroups.begin(), kInstanceGroups.end(), name) != kInstanceGroups.end();
}

bool needs_oracle(const std::string& name) {
  return name == "triple-agreement" || name == "oracle-sandwich" || name == "power-graph-identity";
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t cached(ResultCache* cache, const std::string& g6, const std::string& parameter,
                   const std::string& method, const std::function<std::size_t()>& compute) {
  if (cache) {
    if (auto v = cache->get(g6, parameter, method)) return *v;
  }
  const std::size_t v = compute();
  if (cache) cache->put(g6, parameter, method, v);
  return v;
}

bool stem_invariant(const Tree& t, std::size_t value) {
  for (Vertex s = 0; s < t.order(); ++s) {
    std::optional<Vertex> first;
    std::size_t count = 0;
    for (Vertex w : t.neighbors(s)) {
      if (t.degree(w) != 1) continue;
      if (!first) first = w;
      ++count;
    }
    if (count < 2 || t.order() < 3) continue;
    const Vertex drop[] = {*first};
    if (eternal2(remove_vertices(t, drop).tree) != value) return false;
  }
  return true;
}

// nullopt when the theorem does not apply to the record.
std::optional<bool> holds_on(const std::string& name, const TreeRecord& r) {
  const std::size_t e = r.eternal2_algorithm1;
  if (name == "sandwich") return r.gamma2 <= e && e <= r.gamma && r.gamma <= r.order;
  if (name == "upper-bound") return e <= ceil_div(r.order, 3);
  if (name == "triple-agreement") {
    if (e != r.eternal2_reduction) return false;
    auto it = r.oracle.find(2);
    return it == r.oracle.end() || it->second == e;
  }
  if (name == "root-independence") return r.root_independent;
  if (name == "script-T") return r.script_T == (e == r.gamma);
  if (name == "gamma2-characterization") return (e == r.gamma2) == (r.gamma == r.gamma2);
  if (name == "critical-characterization") return r.critical_family == r.critical;
  if (name == "stem-invariance") return r.stem_invariant;
  if (name == "oracle-sandwich") {
    if (r.oracle.empty()) return std::nullopt;
    for (auto [k, m] : r.oracle) {
      if (r.gamma_k.at(k) > m) return false;
      if (k >= 2 && m > r.gamma_k.at(k / 2)) return false;
    }
    return true;
  }
  if (name == "power-graph-identity") {
    if (r.power_oracle.empty()) return std::nullopt;
    for (auto [k, m] : r.power_oracle) {
      auto it = r.oracle.find(k);
      if (it != r.oracle.end() && it->second != m) return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown theorem '" + name + "'");
}

std::size_t instance_value(const InstanceCheck& c) {
  const Tree t(parse_graph6(c.graph6));
  if (c.method == "algorithm1") return eternal2(t);
  if (c.method == "oracle") return eternal_number_oracle(t.graph(), c.k).m_min;
  if (c.method == "gamma") return gamma_k_tree(t, c.k).value;
  throw std::invalid_argument("unknown instance method '" + c.method + "'");
}

std::vector<std::string> selected(const std::vector<std::string>& theorems) {
  if (!theorems.empty()) return theorems;
  return theorem_names();
}

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v = kCorpusTheorems;
    v.insert(v.end(), kInstanceGroups.begin(), kInstanceGroups.end());
    return v;
  }();
  return all;
}

std::size_t oracle_order_limit(int k) { return k <= 2 ? 10 : 9; }

TreeRecord compute_record(const Tree& t, const std::vector<int>& k_set, bool with_oracle,
                          std::size_t power_max_order, ResultCache* cache, const OracleLimits& limits) {
  TreeRecord r;
  r.graph6 = canonical_graph6(t);
  r.order = t.order();
  r.diameter = tree_diameter(t);
  r.gamma = gamma_k_tree(t, 1).value;
  r.gamma2 = gamma_k_tree(t, 2).value;

  std::set<int> ks(k_set.begin(), k_set.end());
  if (with_oracle) ks.insert(2);
  for (int k : ks) {
    r.gamma_k[k] = gamma_k_tree(t, k).value;
    if (k >= 2) r.gamma_k[k / 2] = gamma_k_tree(t, k / 2).value;
  }

  r.eternal2_algorithm1 = eternal2(t);
  r.eternal2_reduction = eternal2_by_reduction(t).total;
  for (Vertex root = 1; root < t.order(); ++root)
    if (eternal2_algorithm1(t, root).value != r.eternal2_algorithm1) r.root_independent = false;

  if (with_oracle) {
    for (int k : ks) {
      if (t.order() > oracle_order_limit(k)) continue;
      r.oracle[k] = cached(cache, r.graph6, "eternal-k" + std::to_string(k), "oracle",
                           [&] { return eternal_number_oracle(t.graph(), k, limits).m_min; });
      if (k >= 2 && t.order() <= power_max_order)
        r.power_oracle[k] = cached(cache, r.graph6, "power-k" + std::to_string(k), "oracle",
                                   [&] { return eternal_number_oracle(power_graph(t.graph(), k), 1, limits).m_min; });
    }
  }

  r.script_T = recognize_script_T(t).member;
  r.blackboard_T = recognize_bbT(t);
  r.critical_family = recognize_C(t).member;
  r.critical = is_critical(t).critical;
  r.stem_invariant = stem_invariant(t, r.eternal2_algorithm1);
  return r;
}

std::vector<TheoremVerdict> evaluate_theorems(const std::vector<TreeRecord>& records,
                                              const std::vector<InstanceCheck>& instances,
                                              const std::vector<std::string>& theorems) {
  std::vector<TheoremVerdict> out;
  for (const std::string& name : selected(theorems)) {
    TheoremVerdict v;
    v.name = name;
    if (is_instance_group(name)) {
      for (const InstanceCheck& c : instances) {
        if (c.group != name) continue;
        ++v.checked;
        if (c.value != c.expected) {
          v.holds = false;
          v.counterexamples.push_back(c.graph6);
        }
      }
    } else {
      for (const TreeRecord& r : records) {
        const auto ok = holds_on(name, r);
        if (!ok) continue;
        ++v.checked;
        if (!*ok) {
          v.holds = false;
          v.counterexamples.push_back(r.graph6);
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<InstanceCheck> run_instances(const std::vector<std::string>& theorems, ResultCache* cache) {
  std::vector<InstanceCheck> out;
  auto add = [&](const std::string& group, std::string label, const Tree& t, int k, const std::string& method,
                 std::size_t expected) {
    InstanceCheck c{group, std::move(label), emit_graph6(t.graph()), k, method, expected, 0};
    if (method == "oracle")
      c.value = cached(cache, canonical_graph6(t), "eternal-k" + std::to_string(k), method,
                       [&] { return instance_value(c); });
    else
      c.value = instance_value(c);
    out.push_back(std::move(c));
  };
  for (const std::string& name : selected(theorems)) {
    if (name == "path-formula") {
      for (std::size_t n = 1; n <= 30; ++n)
        add(name, "P" + std::to_string(n), Tree(path_graph(n)), 2, "algorithm1", ceil_div(n, 3));
      for (int k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 10; ++n)
          add(name, "P" + std::to_string(n) + " k=" + std::to_string(k), Tree(path_graph(n)), k, "oracle",
              ceil_div(n, static_cast<std::size_t>(k) + 1));
    } else if (name == "spider") {
      for (std::size_t n = 2; n <= 6; ++n) {
        const Tree t = gen_spider_Tn(n);
        add(name, "spider n=" + std::to_string(n) + " gamma", t, 1, "gamma", n);
        add(name, "spider n=" + std::to_string(n) + " eternal", t, 2, "algorithm1", 2);
      }
    } else if (name == "extremal-families") {
      const std::vector<std::pair<std::string, Tree>> bases = {
          {"K1", Tree(1, {})}, {"P2", Tree(path_graph(2))}, {"P3", Tree(path_graph(3))}};
      for (const auto& [label, base] : bases) {
        add(name, "T_Mk base=" + label + " k=2", gen_T_Mk(base, 2), 2, "algorithm1", base.order());
        add(name, "T_Mk base=" + label + " k=3", gen_T_Mk(base, 3), 3, "oracle", base.order());
      }
      for (std::size_t units = 1; units <= 2; ++units)
        add(name, "T_mkD k=3 delta=3 units=" + std::to_string(units), gen_T_mkD(3, 3, units, chain_joins(3, 3, units)),
            3, "oracle", units);
    }
  }
  return out;
}

VerificationReport run_verification(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.n_min < 1 || opts.n_max < opts.n_min) throw std::invalid_argument("verify: need 1 <= n_min <= n_max");
  for (int k : opts.k_set)
    if (k < 1) throw std::invalid_argument("verify: every k must be positive");

  VerificationReport rep;
  rep.n_min = opts.n_min;
  rep.n_max = opts.n_max;
  rep.k_set = opts.k_set;
  rep.jobs = std::max<std::size_t>(1, opts.jobs);
  const std::vector<std::string> names = selected(opts.theorems);
  for (const auto& n : names)
    if (std::find(theorem_names().begin(), theorem_names().end(), n) == theorem_names().end())
      throw std::invalid_argument("unknown theorem '" + n + "'");
  const bool with_oracle = std::any_of(names.begin(), names.end(), needs_oracle);
  const bool with_corpus = std::any_of(names.begin(), names.end(), [](const std::string& n) { return !is_instance_group(n); });

  std::vector<Tree> corpus;
  if (with_corpus)
    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n)
      for (Tree& t : enumerate_trees(n)) corpus.push_back(std::move(t));

  rep.records.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++)
      rep.records[i] = compute_record(corpus[i], opts.k_set, with_oracle, opts.power_max_order, opts.cache, opts.limits);
  };
  if (rep.jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < rep.jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const TreeRecord& a, const TreeRecord& b) { return a.graph6 < b.graph6; });

  rep.instances = run_instances(names, opts.cache);
  rep.verdicts = evaluate_theorems(rep.records, rep.instances, names);
  if (std::find(names.begin(), names.end(), "extremal-families") != names.end()) {
    rep.notes.push_back(
        "T_mkD at k=3, delta=3: a unit has " + std::to_string(unit_order(3, 3)) +
        " vertices, so value = units means n / " + std::to_string(unit_order(3, 3)) +
        "; the closed form n / (1 + sum_{i=1}^{k} delta (delta-1)^(i-1)) would divide by 22 and is not asserted");
  }
  for (const auto& v : rep.verdicts) {
    if (v.holds) continue;
    rep.notes.push_back(v.name + ": " + std::to_string(v.counterexamples.size()) + " counterexample(s)");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool recheck_counterexample(const std::string& theorem, const std::string& graph6, const std::vector<int>& k_set) {
  if (is_instance_group(theorem)) {
    for (const InstanceCheck& c : run_instances({theorem}))
      if (canonical_graph6(Tree(parse_graph6(c.graph6))) == canonical_graph6(Tree(parse_graph6(graph6))) &&
          c.value != c.expected)
        return true;
    return false;
  }
  const Tree t(parse_graph6(graph6));
  const TreeRecord r = compute_record(t, k_set, needs_oracle(theorem));
  const auto ok = holds_on(theorem, r);
  return ok && !*ok;
}

bool revalidate(const VerificationReport& report) {
  std::vector<std::string> names;
  for (const auto& v : report.verdicts) names.push_back(v.name);
  if (evaluate_theorems(report.records, report.instances, names) != report.verdicts) return false;
  for (const auto& v : report.verdicts) {
    if (v.holds) continue;
    if (v.counterexamples.empty()) return false;
    for (const auto& g6 : v.counterexamples)
      if (!recheck_counterexample(v.name, g6, report.k_set)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::json int_map(const std::map<int, std::size_t>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::map<int, std::size_t> int_map_from(const nlohmann::json& j) {
  std::map<int, std::size_t> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[std::stoi(it.key())] = it.value().get<std::size_t>();
  return m;
}

}  // namespace

nlohmann::json to_json(const TreeRecord& r) {
  return {
      {"graph6", r.graph6},
      {"n", r.order},
      {"diameter", r.diameter},
      {"gamma", r.gamma},
      {"gamma2", r.gamma2},
      {"gamma_k", int_map(r.gamma_k)},
      {"eternal2_algorithm1", r.eternal2_algorithm1},
      {"eternal2_reduction", r.eternal2_reduction},
      {"root_independent", r.root_independent},
      {"oracle", int_map(r.oracle)},
      {"power_oracle", int_map(r.power_oracle)},
      {"script_T", r.script_T},
      {"blackboard_T", r.blackboard_T},
      {"critical_family", r.critical_family},
      {"critical", r.critical},
      {"stem_invariant", r.stem_invariant},
  };
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& c : report.instances)
    instances.push_back({{"group", c.group},
                         {"label", c.label},
                         {"graph6", c.graph6},
                         {"k", c.k},
                         {"method", c.method},
                         {"expected", c.expected},
                         {"value", c.value}});
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back(
        {{"name", v.name}, {"holds", v.holds}, {"checked", v.checked}, {"counterexamples", v.counterexamples}});
  return {
      {"schema_version", report.schema_version},
      {"corpus", {{"n_min", report.n_min}, {"n_max", report.n_max}, {"k_set", report.k_set}}},
      {"records", records},
      {"instances", instances},
      {"verdicts", verdicts},
      {"notes", report.notes},
      {"timing", {{"seconds", report.seconds}, {"jobs", report.jobs}}},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport rep;
  rep.schema_version = j.at("schema_version").get<int>();
  if (rep.schema_version != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version " + std::to_string(rep.schema_version));
  const auto& corpus = j.at("corpus");
  rep.n_min = corpus.at("n_min").get<std::size_t>();
  rep.n_max = corpus.at("n_max").get<std::size_t>();
  rep.k_set = corpus.at("k_set").get<std::vector<int>>();
  for (const auto& x : j.at("records")) {
    TreeRecord r;
    r.graph6 = x.at("graph6").get<std::string>();
    r.order = x.at("n").get<std::size_t>();
    r.diameter = x.at("diameter").get<int>();
    r.gamma = x.at("gamma").get<std::size_t>();
    r.gamma2 = x.at("gamma2").get<std::size_t>();
    r.gamma_k = int_map_from(x.at("gamma_k"));
    r.eternal2_algorithm1 = x.at("eternal2_algorithm1").get<std::size_t>();
    r.eternal2_reduction = x.at("eternal2_reduction").get<std::size_t>();
    r.root_independent = x.at("root_independent").get<bool>();
    r.oracle = int_map_from(x.at("oracle"));
    r.power_oracle = int_map_from(x.at("power_oracle"));
    r.script_T = x.at("script_T").get<bool>();
    r.blackboard_T = x.at("blackboard_T").get<bool>();
    r.critical_family = x.at("critical_family").get<bool>();
    r.critical = x.at("critical").get<bool>();
    r.stem_invariant = x.at("stem_invariant").get<bool>();
    rep.records.push_back(std::move(r));
  }
  for (const auto& x : j.at("instances"))
    rep.instances.push_back({x.at("group").get<std::string>(), x.at("label").get<std::string>(),
                             x.at("graph6").get<std::string>(), x.at("k").get<int>(),
                             x.at("method").get<std::string>(), x.at("expected").get<std::size_t>(),
                             x.at("value").get<std::size_t>()});
  for (const auto& x : j.at("verdicts"))
    rep.verdicts.push_back({x.at("name").get<std::string>(), x.at("holds").get<bool>(),
                            x.at("checked").get<std::size_t>(),
                            x.at("counterexamples").get<std::vector<std::string>>()});
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  rep.seconds = j.at("timing").at("seconds").get<double>();
  rep.jobs = j.at("timing").at("jobs").get<std::size_t>();
  return rep;
}

std::string verdicts_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "theorem,holds,checked,counterexamples\n";
  for (const auto& v : report.verdicts) {
    out << v.name << ',' << (v.holds ? "true" : "false") << ',' << v.checked << ',';
    for (std::size_t i = 0; i < v.counterexamples.size(); ++i) out << (i ? ";" : "") << v.counterexamples[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace etdom
