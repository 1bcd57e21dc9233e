#pragma once

// fzgraph command-line front end.
//
//   fzgraph count {spanning-trees|hamiltonian|cycle-matching} --method NAME
//                 (--input FILE | --graph NAME) [--level K] [--vertices N]
//                 [--anchor C] [--format json|text] [--allow-large]
//   fzgraph verify (--input FILE | --graph NAME | --corpus) [--format json|text]
//
// Exit codes: 0 success, 1 verify disagreement, 2 usage/parse/range error,
// 3 size guard or oracle cap, 4 internal consistency failure.

#include "fzgraph/fzgraph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fzg::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kSizeGuard = 3,
  kConsistency = 4,
};

struct RunReport {
  unsigned n = 0;
  std::size_t m = 0;
  std::string quantity;
  std::string method;
  BigCount value;
  double elapsed_ms = 0.0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["graph"] = {{"n", n}, {"m", m}};
    j["quantity"] = quantity;
    j["method"] = method;
    j["value"] = value.str();
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "quantity=" << quantity << " method=" << method << " n=" << n << " m=" << m
       << " value=" << value.str() << " elapsed_ms=" << elapsed_ms;
    return os.str();
  }
};

struct CountRequest {
  std::string quantity;
  std::string method;
  std::optional<unsigned> level;
  unsigned anchor = 0;
  EvalOptions eval;
};

/// Method names accepted for each quantity.
inline const std::map<std::string, std::vector<std::string>>& method_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"spanning-trees", {"fermion-trace", "kirchhoff-cofactor", "oracle"}},
      {"hamiltonian", {"fz-trace", "fz-integral", "liu", "goulden-jackson", "nilpotent", "oracle"}},
      {"cycle-matching", {"zeon-trace", "oracle"}},
  };
  return table;
}

/// Undirected Hamiltonian cycles from the directed Goulden-Jackson count.
inline BigCount hamiltonian_goulden_jackson_undirected(const Graph& g, unsigned anchor,
                                                       const EvalOptions& opts) {
  const BigCount directed = hamiltonian_goulden_jackson(g, anchor, opts);
  if (g.order() < 3) return 0;
  if (directed % 2 != 0) {
    throw ConsistencyError("Goulden-Jackson circuit count " + directed.str() + " is odd");
  }
  return directed / 2;
}

inline BigCount evaluate(const Graph& g, const CountRequest& req) {
  const auto& q = req.quantity;
  const auto& m = req.method;
  if (q == "spanning-trees") {
    if (m == "fermion-trace") return spanning_tree_count(g, req.eval);
    if (m == "kirchhoff-cofactor") return kirchhoff_cofactor(g, req.anchor);
    if (m == "oracle") return oracle::count_spanning_trees_bruteforce(g);
  } else if (q == "hamiltonian") {
    if (m == "fz-trace") return hamiltonian_fz_trace(g, req.eval);
    if (m == "fz-integral") return fz_convolution_integral(g, req.eval);
    if (m == "liu") return hamiltonian_liu(g, req.eval);
    if (m == "goulden-jackson") return hamiltonian_goulden_jackson_undirected(g, req.anchor, req.eval);
    if (m == "nilpotent") return hamiltonian_nilpotent(g, req.eval);
    if (m == "oracle") return oracle::count_hamiltonian_cycles_bruteforce(g);
  } else if (q == "cycle-matching") {
    const unsigned level = req.level.value_or(g.order());
    if (level > g.order()) {
      throw RangeError("level " + std::to_string(level) + " exceeds vertex count " +
                       std::to_string(g.order()));
    }
    if (m == "zeon-trace") return zeon_level_trace(adjacency(g), level, req.eval);
    if (m == "oracle") return oracle::cycle_matching_level(g, level);
  }
  throw RangeError("unknown method '" + m + "' for quantity '" + q + "'");
}

inline RunReport run_count(const Graph& g, const CountRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.n = g.order();
  r.m = g.size();
  r.quantity = req.quantity;
  r.method = req.method;
  r.value = evaluate(g, req);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// One quantity checked by `verify`: every algebraic route plus its oracle.
struct Agreement {
  std::string quantity;
  std::vector<RunReport> reports;
  bool pass = true;
  std::string divergence;
};

inline Agreement agree(std::string quantity, std::vector<RunReport> reports) {
  Agreement a{std::move(quantity), std::move(reports), true, {}};
  const RunReport* ref = nullptr;
  for (const auto& r : a.reports) {
    if (r.method == "oracle") ref = &r;
  }
  if (ref == nullptr && !a.reports.empty()) ref = &a.reports.front();
  for (const auto& r : a.reports) {
    if (r.value != ref->value) {
      a.pass = false;
      a.divergence = r.method + "=" + r.value.str() + " vs " + ref->method + "=" + ref->value.str();
      break;
    }
  }
  return a;
}

inline void require_oracle_caps(const Graph& g) {
  oracle::kSpanningTreeEdges.check(g.size());
  oracle::kHamiltonianVertices.check(g.order());
  oracle::kCycleMatchingVertices.check(g.order());
}

/// Runs every route for every quantity on g.
inline std::vector<Agreement> verify_graph(const Graph& g, const EvalOptions& eval) {
  require_oracle_caps(g);
  std::vector<Agreement> out;

  auto run = [&](const std::string& q, const std::string& m, unsigned anchor = 0,
                 std::optional<unsigned> level = std::nullopt) {
    return run_count(g, CountRequest{q, m, level, anchor, eval});
  };
  auto suffixed = [](RunReport r, const std::string& tag) {
    r.method += tag;
    return r;
  };

  std::vector<RunReport> ham;
  for (const auto& m : method_table().at("hamiltonian")) {
    if (m == "goulden-jackson") {
      for (unsigned c = 0; c < g.order(); ++c) {
        ham.push_back(suffixed(run("hamiltonian", m, c), "[anchor=" + std::to_string(c) + "]"));
      }
    } else {
      ham.push_back(run("hamiltonian", m));
    }
  }
  out.push_back(agree("hamiltonian", std::move(ham)));

  if (g.order() >= 1) {
    std::vector<RunReport> trees;
    trees.push_back(run("spanning-trees", "fermion-trace"));
    for (unsigned c = 0; c < g.order(); ++c) {
      trees.push_back(suffixed(run("spanning-trees", "kirchhoff-cofactor", c),
                               "[anchor=" + std::to_string(c) + "]"));
    }
    trees.push_back(run("spanning-trees", "oracle"));
    out.push_back(agree("spanning-trees", std::move(trees)));
  }

  for (unsigned k = 0; k <= g.order(); ++k) {
    std::vector<RunReport> cm;
    cm.push_back(run("cycle-matching", "zeon-trace", 0, k));
    cm.push_back(run("cycle-matching", "oracle", 0, k));
    out.push_back(agree("cycle-matching[level=" + std::to_string(k) + "]", std::move(cm)));
  }
  return out;
}

namespace detail {

inline Graph load_graph(const std::string& input, const std::string& graph_name,
                        std::optional<unsigned> vertices, std::istream& in) {
  if (!graph_name.empty()) return corpus::by_name(graph_name);
  if (input == "-") return parse_edge_list(in, vertices);
  std::ifstream file(input);
  if (!file) throw RangeError("cannot open input file '" + input + "'");
  return parse_edge_list(file, vertices);
}

inline void print_verify_text(std::ostream& out, const std::string& label, const Graph& g,
                              const std::vector<Agreement>& checks) {
  out << "graph " << label << " n=" << g.order() << " m=" << g.size() << '\n';
  for (const auto& a : checks) {
    for (const auto& r : a.reports) {
      out << "  " << a.quantity << ' ' << r.method << ' ' << r.value.str() << '\n';
    }
    out << "  " << a.quantity << ' ' << (a.pass ? "PASS" : "FAIL");
    if (!a.pass) out << " (" << a.divergence << ')';
    out << '\n';
  }
}

inline nlohmann::ordered_json verify_json(const std::string& label, const Graph& g,
                                          const std::vector<Agreement>& checks) {
  nlohmann::ordered_json j;
  j["name"] = label;
  j["graph"] = {{"n", g.order()}, {"m", g.size()}};
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : checks) {
    nlohmann::ordered_json q;
    q["quantity"] = a.quantity;
    auto values = nlohmann::ordered_json::object();
    for (const auto& r : a.reports) values[r.method] = r.value.str();
    q["values"] = values;
    q["pass"] = a.pass;
    if (!a.pass) q["divergence"] = a.divergence;
    arr.push_back(q);
    all = all && a.pass;
  }
  j["checks"] = arr;
  j["pass"] = all;
  return j;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact graph enumeration through fermion and zeon induced operators", "fzgraph"};
  app.require_subcommand(1);

  std::string input;
  std::string graph_name;
  std::optional<unsigned> vertices;
  std::string format = "text";
  bool allow_large = false;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Edge-list file, or - for standard input");
    sub->add_option("--graph", graph_name, "Built-in graph name (K4, C7, petersen, ...)");
    sub->add_option("--vertices", vertices, "Vertex count override");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--allow-large", allow_large, "Lift the 2^n size guard");
    sub->add_option("--threads", threads, "Worker threads for lattice sums (0 = auto)");
  };

  CountRequest req;
  unsigned level = 0;
  auto* count = app.add_subcommand("count", "Count one quantity by one method");
  count->add_option("quantity", req.quantity, "spanning-trees | hamiltonian | cycle-matching")
      ->required()
      ->check(CLI::IsMember({"spanning-trees", "hamiltonian", "cycle-matching"}));
  count->add_option("--method", req.method, "Counting route")->required();
  auto* level_opt = count->add_option("--level", level, "Grade for cycle-matching (default n)");
  count->add_option("--anchor", req.anchor, "Anchor vertex for goulden-jackson / kirchhoff-cofactor");
  add_common(count);

  bool whole_corpus = false;
  auto* verify = app.add_subcommand("verify", "Cross-check every route against the oracles");
  verify->add_flag("--corpus", whole_corpus, "Verify every graph in the built-in corpus");
  add_common(verify);

  std::vector<const char*> argv{"fzgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    req.eval = EvalOptions{allow_large, threads};
    const int sources = (input.empty() ? 0 : 1) + (graph_name.empty() ? 0 : 1) + (whole_corpus ? 1 : 0);
    if (sources != 1) {
      err << "error: exactly one of --input, --graph" << (verify->parsed() ? ", --corpus" : "")
          << " is required\n";
      return kUsage;
    }

    if (count->parsed()) {
      const auto& allowed = method_table().at(req.quantity);
      if (std::find(allowed.begin(), allowed.end(), req.method) == allowed.end()) {
        err << "error: method '" << req.method << "' is not valid for " << req.quantity << '\n';
        return kUsage;
      }
      if (level_opt->count() > 0) {
        if (req.quantity != "cycle-matching") {
          err << "error: --level applies only to cycle-matching\n";
          return kUsage;
        }
        req.level = level;
      }
      const Graph g = detail::load_graph(input, graph_name, vertices, in);
      const RunReport r = run_count(g, req);
      if (format == "json") {
        out << r.to_json().dump() << '\n';
      } else {
        out << r.to_text() << '\n';
      }
      return kOk;
    }

    std::vector<std::pair<std::string, Graph>> targets;
    if (whole_corpus) {
      targets = corpus::builtin();
    } else {
      targets.emplace_back(graph_name.empty() ? input : graph_name,
                           detail::load_graph(input, graph_name, vertices, in));
    }
    for (const auto& [label, g] : targets) require_oracle_caps(g);

    bool all = true;
    auto docs = nlohmann::ordered_json::array();
    for (const auto& [label, g] : targets) {
      const auto checks = verify_graph(g, req.eval);
      if (format == "json") {
        docs.push_back(detail::verify_json(label, g, checks));
      } else {
        detail::print_verify_text(out, label, g, checks);
      }
      for (const auto& a : checks) {
        if (!a.pass) {
          all = false;
          err << "FAIL " << label << ' ' << a.quantity << ": " << a.divergence << '\n';
        }
      }
    }
    if (format == "json") {
      nlohmann::ordered_json j;
      j["graphs"] = docs;
      j["pass"] = all;
      out << j.dump() << '\n';
    } else {
      out << (all ? "PASS" : "FAIL") << '\n';
    }
    return all ? kOk : kDisagreement;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fzg::cli
