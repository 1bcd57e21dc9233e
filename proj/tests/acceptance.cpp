// Standalone acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include "fzgraph/fzgraph.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#ifndef FZGRAPH_CLI_PATH
#error "FZGRAPH_CLI_PATH must name the fzgraph executable"
#endif

namespace {

using namespace fzg;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges={";
  for (const auto& [u, v] : g.edges()) os << ' ' << u << '-' << v;
  os << " }";
  return os.str();
}

std::vector<Graph> graphs_up_to(unsigned lo, unsigned hi) {
  std::vector<Graph> out;
  for (unsigned n = lo; n <= hi; ++n)
    for (auto& g : corpus::all_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> hamiltonian_corpus() {
  std::vector<Graph> out;
  for (unsigned n = 3; n <= 6; ++n)
    for (auto& g : corpus::connected_graphs(n)) out.push_back(std::move(g));
  std::mt19937_64 rng(20241);
  for (unsigned n : {7U, 8U})
    for (int i = 0; i < 200; ++i) out.push_back(corpus::random_connected(n, rng));
  return out;
}

Outcome hamiltonian_agreement() {
  Outcome o;
  const auto graphs = hamiltonian_corpus();
  for (const Graph& g : graphs) {
    const BigCount want = oracle::count_hamiltonian_cycles_bruteforce(g);
    const BigCount gj = hamiltonian_goulden_jackson(g, 0);
    const std::vector<std::pair<const char*, BigCount>> got{
        {"fz-trace", hamiltonian_fz_trace(g)},
        {"fz-integral", fz_convolution_integral(g)},
        {"liu", hamiltonian_liu(g)},
        {"nilpotent", hamiltonian_nilpotent(g)},
        {"goulden-jackson/2", gj % 2 == 0 ? BigCount(gj / 2) : BigCount(-1)},
    };
    for (const auto& [name, v] : got) {
      if (v != want) o.fail(std::string(name) + "=" + v.str() + " oracle=" + want.str() + " on " + describe(g));
    }
  }
  o.detail = o.pass ? std::to_string(graphs.size()) + " graphs" : o.detail;
  return o;
}

Outcome golden_counts() {
  Outcome o;
  struct Golden {
    const char* name;
    Graph g;
    int ham;
    int trees;
  };
  const std::vector<Golden> table{{"K4", corpus::complete(4), 3, 16},
                                  {"K5", corpus::complete(5), 12, 125},
                                  {"C7", corpus::cycle(7), 1, 7},
                                  {"petersen", corpus::petersen(), 0, 2000}};
  for (const auto& [name, g, ham, trees] : table) {
    if (oracle::count_hamiltonian_cycles_bruteforce(g) != ham ||
        oracle::count_spanning_trees_bruteforce(g) != trees) {
      o.fail(std::string("oracle disagrees with golden on ") + name);
    }
    if (hamiltonian_fz_trace(g) != ham || hamiltonian_liu(g) != ham ||
        fz_convolution_integral(g) != ham || hamiltonian_nilpotent(g) != ham) {
      o.fail(std::string("Hamiltonian count off on ") + name);
    }
    if (spanning_tree_count(g) != trees) o.fail(std::string("spanning-tree count off on ") + name);
  }
  return o;
}

Outcome cycle_matching_identity() {
  Outcome o;
  std::size_t checked = 0;
  for (const Graph& g : graphs_up_to(0, 7)) {
    const unsigned n = g.order();
    const IntMatrix a = adjacency(g);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const MultiIndex i(s, n);
      const BigInt lhs = oracle::cycle_matching_covers(g, i);
      const BigInt rhs = per(submatrix(a, i, i));
      ++checked;
      if (lhs != rhs) o.fail("covers=" + lhs.str() + " per=" + rhs.str() + " on " + describe(g));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " subsets";
  return o;
}

Outcome spanning_tree_identity() {
  Outcome o;
  auto graphs = graphs_up_to(1, 7);
  graphs.push_back(corpus::petersen());
  for (const Graph& g : graphs) {
    const BigCount want = oracle::count_spanning_trees_bruteforce(g);
    if (spanning_tree_count(g) != want) o.fail("fermion trace off on " + describe(g));
    for (unsigned c = 0; c < g.order(); ++c) {
      if (kirchhoff_cofactor(g, c) != want) o.fail("cofactor " + std::to_string(c) + " off on " + describe(g));
    }
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

Outcome algebra_bridges() {
  Outcome o;
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 6);
    const IntMatrix m = testing::random_matrix(k, k, -4, 4, rng);
    auto f = CliffordElement::scalar(k, 1);
    auto z = ZeonElement::scalar(k, 1);
    for (unsigned r = 0; r < k; ++r) {
      f = f * vector_from_row<CliffordElement>(m.row(r));
      z = z * vector_from_row<ZeonElement>(m.row(r));
    }
    const MultiIndex top = MultiIndex::full(k);
    if (coefficient(f, top) != det(m)) o.fail("Clifford coefficient != det at trial " + std::to_string(trial));
    const BigInt zc = coefficient(z, top);
    if (zc != per(m) || zc != per_naive(m)) o.fail("zeon coefficient != per at trial " + std::to_string(trial));
  }
  return o;
}

Outcome anchor_independence() {
  Outcome o;
  std::mt19937_64 rng(6006);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
    const Graph g = corpus::random_graph(n, 0.6, rng);
    const BigCount first = hamiltonian_goulden_jackson(g, 0);
    for (unsigned c = 1; c < n; ++c) {
      if (hamiltonian_goulden_jackson(g, c) != first) {
        o.fail("anchor " + std::to_string(c) + " differs on " + describe(g));
      }
    }
  }
  return o;
}

Outcome divisibility() {
  Outcome o;
  auto graphs = graphs_up_to(3, 7);
  for (auto& g : hamiltonian_corpus()) graphs.push_back(std::move(g));
  graphs.push_back(corpus::petersen());
  for (const Graph& g : graphs) {
    const BigInt two_n = 2 * BigInt(g.order());
    if (fz_trace_sum(g) % two_n != 0) o.fail("FZ sum not divisible by 2n on " + describe(g));
    if (liu_sum(g) % two_n != 0) o.fail("Liu sum not divisible by 2n on " + describe(g));
    const BigRational t = fermion_level_trace_normalized(laplacian(g), g.order() - 1);
    if (boost::multiprecision::denominator(t) != 1) o.fail("normalized trace not integral on " + describe(g));
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + FZGRAPH_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome cli_contract() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("fzgraph-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path bad = dir / "bad.edges";
  const fs::path big = dir / "c25.edges";
  std::ofstream(bad) << "0 1\n1 x\n";
  std::ofstream(big) << serialize_edge_list(corpus::cycle(25));

  if (const int rc = run_cli("verify --corpus"); rc != 0) o.fail("verify --corpus exit " + std::to_string(rc));
  if (const int rc = run_cli("count hamiltonian --method fz-trace --input \"" + bad.string() + "\""); rc != 2) {
    o.fail("malformed edge list exit " + std::to_string(rc));
  }
  if (const int rc = run_cli("count hamiltonian --method fz-trace --input \"" + big.string() + "\""); rc != 3) {
    o.fail("n=25 without --allow-large exit " + std::to_string(rc));
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 Hamiltonian agreement across methods and oracle", hamiltonian_agreement},
      {"AC2 golden counts", golden_counts},
      {"AC3 cycle-matching covers equal induced permanents", cycle_matching_identity},
      {"AC4 spanning trees by fermion trace, oracle and every cofactor", spanning_tree_identity},
      {"AC5 Clifford/zeon coefficients equal det/per", algebra_bridges},
      {"AC6 Goulden-Jackson anchor independence", anchor_independence},
      {"AC7 divisibility invariants", divisibility},
      {"AC8 CLI exit-code contract", cli_contract},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << secs << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
