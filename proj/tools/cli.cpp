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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "etdom/bench.hpp"
#include "etdom/canonical.hpp"
#include "etdom/distance.hpp"
#include "etdom/domination.hpp"
#include "etdom/eternal.hpp"
#include "etdom/families.hpp"
#include "etdom/graph_io.hpp"
#include "etdom/oracle.hpp"
#include "etdom/verify.hpp"

namespace etdom::cli {
namespace {

using nlohmann::json;

// Thrown for option combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<Graph> read_graphs(const std::string& input, const std::string& format, std::istream& in) {
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &in;
  if (input != "-") {
    file = std::make_unique<std::ifstream>(input);
    if (!*file) throw UsageError("cannot open '" + input + "'");
    src = file.get();
  }
  if (format == "graph6") return parse_graph6_stream(*src);
  return {parse_edge_list(*src)};
}

// Writes to --out when given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

std::string emit_graph(const Graph& g, const std::string& format) {
  return format == "graph6" ? emit_graph6(g) + "\n" : emit_edge_list(g);
}

Tree named_tree(const std::string& name) {
  if (name == "K1") return Tree(1, {});
  auto count = [&](std::size_t skip) {
    std::size_t pos = 0;
    const std::string digits = name.substr(skip);
    const unsigned long v = std::stoul(digits, &pos);
    if (pos != digits.size() || v == 0) throw UsageError("bad tree name '" + name + "'");
    return static_cast<std::size_t>(v);
  };
  try {
    if (name.size() > 1 && name[0] == 'P' && std::isdigit(static_cast<unsigned char>(name[1])))
      return Tree(path_graph(count(1)));
    if (name.size() > 1 && name[0] == 'S' && std::isdigit(static_cast<unsigned char>(name[1])))
      return Tree(star_graph(count(1)));
  } catch (const std::logic_error&) {
    throw UsageError("bad tree name '" + name + "'");
  }
  return Tree(parse_graph6(name));
}

json compute_one(const Graph& g, int k, const std::string& method, const std::vector<Vertex>& attacks) {
  const bool tree = is_tree(g);
  json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["k"] = k;
  if (tree) {
    const Tree t(g);
    j["canonical"] = canonical_graph6(t);
    j["gamma"] = gamma_k_tree(t, 1).value;
    j["gamma2"] = gamma_k_tree(t, 2).value;
    j["gamma_k"] = gamma_k_tree(t, k).value;
  } else {
    j["gamma"] = gamma_k_brute(g, 1).value;
    j["gamma2"] = gamma_k_brute(g, 2).value;
    j["gamma_k"] = gamma_k_brute(g, k).value;
  }

  std::string used = method;
  if (used == "auto") used = tree && k == 2 ? "algorithm1" : "oracle";
  if ((used == "algorithm1" || used == "reduction") && (!tree || k != 2))
    throw UsageError("method " + used + " needs a tree and k = 2");
  if (!attacks.empty() && used != "oracle") throw UsageError("--attacks needs the oracle method");
  j["method"] = used;

  if (used == "algorithm1") {
    j["eternal"] = eternal2(Tree(g));
  } else if (used == "reduction") {
    const ReductionTrace tr = eternal2_by_reduction(Tree(g));
    j["eternal"] = tr.total;
    json steps = json::array();
    for (const ReductionStep& s : tr.steps)
      steps.push_back({{"center", s.center}, {"removed", s.removed}, {"closed", s.closed}});
    j["steps"] = steps;
    j["residual"] = tr.residual;
    j["residual_diameter"] = tr.residual_diameter;
  } else {
    const OracleResult r = eternal_number_oracle(g, k);
    j["eternal"] = r.m_min;
    j["winning_configs"] = r.winning_configs.size();
    json sweeps = json::array();
    for (auto [m, s] : r.sweeps) sweeps.push_back({{"m", m}, {"sweeps", s}});
    j["sweeps"] = sweeps;
    if (!attacks.empty()) {
      const Defense d = defend_interactively(g, k, r.winning_configs.front(), attacks);
      j["transcript"] = {{"attacks", attacks}, {"configs", d.configs}};
      if (d.failed_at) j["transcript"]["failed_at"] = *d.failed_at;
    }
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eternal distance domination on trees"};
  app.require_subcommand(1);

  // compute
  std::string input = "-", format = "edgelist", method = "auto", out_path;
  int k = 2;
  std::vector<Vertex> attacks;
  auto* compute = app.add_subcommand("compute", "Domination and eternal domination numbers of one or more graphs");
  compute->add_option("--input", input, "File to read, or - for stdin");
  compute->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
  compute->add_option("--k", k, "Guard move distance")->check(CLI::PositiveNumber);
  compute->add_option("--method", method)->check(CLI::IsMember({"auto", "algorithm1", "reduction", "oracle"}));
  compute->add_option("--attacks", attacks, "Attack sequence to defend (oracle)")->delimiter(',');
  compute->add_option("--out", out_path);

  // verify
  std::size_t n_min = 1, n_max = 8, jobs = 1;
  std::vector<int> k_set{2};
  std::vector<std::string> theorems;
  std::string csv_path, revalidate_path;
  bool use_cache = false;
  auto* verify = app.add_subcommand("verify", "Check the theorem suite over all trees up to --nmax");
  verify->add_option("--nmin", n_min)->check(CLI::PositiveNumber);
  verify->add_option("--nmax", n_max)->check(CLI::Range(1, 12));
  verify->add_option("--k", k_set, "Distances for oracle checks")->delimiter(',');
  verify->add_option("--theorems", theorems, "Subset of theorems")->delimiter(',');
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "JSON report file");
  verify->add_option("--csv", csv_path, "Verdict table file (default stdout)");
  verify->add_option("--revalidate", revalidate_path, "Reload a JSON report and recheck it");
  verify->add_flag("--cache", use_cache, "Use etdom-cache.tsv in the working directory");

  // generate
  std::string family, base = "K1";
  std::size_t n = 1, delta = 3, units = 1;
  auto* generate = app.add_subcommand("generate", "Emit a member of a tree family");
  generate->add_option("--family", family)->required()->check(CLI::IsMember({"spider", "TMk", "TmkD", "path", "star"}));
  generate->add_option("--n", n)->check(CLI::PositiveNumber);
  generate->add_option("--base", base, "K1, P<n>, S<n> or graph6");
  generate->add_option("--k", k)->check(CLI::PositiveNumber);
  generate->add_option("--delta", delta);
  generate->add_option("--units", units)->check(CLI::PositiveNumber);
  generate->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
  generate->add_option("--out", out_path);

  // bench
  std::vector<std::size_t> sizes{100000, 1000000};
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "Time the linear algorithm on random trees");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--trials", trials);
  bench->add_option("--seed", seed);
  bench->add_option("--out", out_path, "CSV file (default stdout)");

  // scan-conjectures
  std::vector<int> scan_k{3};
  auto* scan = app.add_subcommand("scan-conjectures", "Search small trees for counterexamples to the k > 2 conjecture");
  scan->add_option("--nmax", n_max)->check(CLI::PositiveNumber);
  scan->add_option("--k", scan_k)->delimiter(',');
  scan->add_option("--out", out_path);

  // enumerate
  std::optional<std::size_t> exact_n;
  std::string enum_format = "graph6";
  auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic trees");
  enumerate->add_option("--n", exact_n)->check(CLI::PositiveNumber);
  enumerate->add_option("--nmax", n_max)->check(CLI::PositiveNumber);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"graph6", "edgelist", "code"}));
  enumerate->add_option("--out", out_path);

  std::vector<std::string> argv_store{"etdom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*compute) {
      std::ostringstream text;
      for (const Graph& g : read_graphs(input, format, in)) text << compute_one(g, k, method, attacks).dump() << "\n";
      emit(out_path, text.str(), out);
      return kExitOk;
    }

    if (*verify) {
      if (!revalidate_path.empty()) {
        std::ifstream f(revalidate_path);
        if (!f) throw UsageError("cannot open '" + revalidate_path + "'");
        const VerificationReport rep = report_from_json(json::parse(f));
        const bool ok = revalidate(rep);
        out << (ok ? "revalidated: verdicts reproduced\n" : "revalidation FAILED\n");
        emit(csv_path, verdicts_csv(rep), out);
        return ok ? kExitOk : kExitCounterexample;
      }
      std::optional<ResultCache> cache;
      if (use_cache) cache.emplace("etdom-cache.tsv");
      VerifyOptions opts;
      opts.n_min = n_min;
      opts.n_max = n_max;
      opts.k_set = k_set;
      opts.theorems = theorems;
      opts.jobs = jobs;
      opts.cache = cache ? &*cache : nullptr;
      const VerificationReport rep = run_verification(opts);
      if (!out_path.empty()) emit(out_path, to_json(rep).dump(1) + "\n", out);
      emit(csv_path, verdicts_csv(rep), out);
      for (const auto& note : rep.notes) err << "note: " << note << "\n";
      return rep.all_hold() ? kExitOk : kExitCounterexample;
    }

    if (*generate) {
      Tree t(1, {});
      std::ostringstream header;
      header << "# family=" << family;
      if (family == "spider") {
        t = gen_spider_Tn(n);
        header << " n=" << n;
      } else if (family == "TMk") {
        t = gen_T_Mk(named_tree(base), k);
        header << " base=" << base << " k=" << k;
      } else if (family == "TmkD") {
        t = gen_T_mkD(k, delta, units, chain_joins(k, delta, units));
        header << " k=" << k << " delta=" << delta << " units=" << units << " joins=chain";
      } else if (family == "path") {
        t = Tree(path_graph(n));
        header << " n=" << n;
      } else {
        t = Tree(star_graph(n));
        header << " leaves=" << n;
      }
      header << " order=" << t.order() << "\n";
      emit(out_path, header.str() + emit_graph(t.graph(), format), out);
      return kExitOk;
    }

    if (*bench) {
      emit(out_path, bench_csv(run_bench(sizes, trials, seed)), out);
      return kExitOk;
    }

    if (*scan) {
      json report = json::array();
      bool found = false;
      for (int kk : scan_k) {
        if (kk <= 2) throw UsageError("scan-conjectures: the conjecture concerns k > 2, got k = " + std::to_string(kk));
        if (n_max > oracle_order_limit(kk))
          throw GuardRailError("scan-conjectures: n_max " + std::to_string(n_max) + " exceeds oracle limit " +
                               std::to_string(oracle_order_limit(kk)) + " for k = " + std::to_string(kk));
        std::size_t scanned = 0, equal = 0;
        json counterexamples = json::array();
        for (std::size_t order = 1; order <= n_max; ++order) {
          for (const Tree& t : enumerate_trees(order)) {
            ++scanned;
            const std::size_t gk = gamma_k_tree(t, kk).value;
            const std::size_t value = eternal_number_oracle(t.graph(), kk).m_min;
            if (gk != value) continue;
            ++equal;
            const std::size_t half = gamma_k_tree(t, kk / 2).value;
            if (value != half)
              counterexamples.push_back({{"graph6", canonical_graph6(t)}, {"gamma_k", gk}, {"eternal", value},
                                         {"gamma_half", half}});
          }
        }
        found = found || !counterexamples.empty();
        report.push_back({{"k", kk},
                          {"n_max", n_max},
                          {"trees_scanned", scanned},
                          {"equality_cases", equal},
                          {"counterexamples", counterexamples},
                          {"verdict", counterexamples.empty() ? "no counterexample up to n_max" : "counterexample found"}});
      }
      emit(out_path, report.dump(1) + "\n", out);
      return found ? kExitCounterexample : kExitOk;
    }

    if (*enumerate) {
      const std::size_t lo = exact_n ? *exact_n : 1;
      const std::size_t hi = exact_n ? *exact_n : n_max;
      std::ostringstream text;
      for (std::size_t order = lo; order <= hi; ++order) {
        for (const Tree& t : enumerate_trees(order)) {
          if (enum_format == "code")
            text << canonical_code(t) << "\n";
          else if (enum_format == "graph6")
            text << emit_graph6(t.graph()) << "\n";
          else
            text << "# tree n=" << order << "\n" << emit_edge_list(t.graph()) << "\n";
        }
      }
      emit(out_path, text.str(), out);
      return kExitOk;
    }
  } catch (const GuardRailError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuardRail;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "bad report: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace etdom::cli
