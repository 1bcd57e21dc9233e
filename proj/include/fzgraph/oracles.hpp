#pragma once

// Brute-force combinatorial enumerators. They share nothing with the
// algebraic code paths beyond the Graph type and exist to check them.

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"
#include "fzgraph/multi_index.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fzg::oracle {

/// Per-oracle input caps.
struct OracleLimit {
  unsigned max_n;
  const char* what;

  void check(std::size_t size) const {
    if (size > max_n) {
      throw SizeLimitError(std::string(what) + ": size " + std::to_string(size) +
                           " exceeds oracle cap " + std::to_string(max_n));
    }
  }
};

inline constexpr OracleLimit kSpanningTreeEdges{24, "count_spanning_trees_bruteforce"};
inline constexpr OracleLimit kHamiltonianVertices{14, "count_hamiltonian_cycles_bruteforce"};
inline constexpr OracleLimit kMatchingVertices{16, "count_perfect_matchings"};
inline constexpr OracleLimit kCycleCoverVertices{10, "count_cycle_covers"};
inline constexpr OracleLimit kCycleMatchingVertices{10, "cycle_matching_covers"};
inline constexpr OracleLimit kKCycleVertices{12, "enumerate_k_cycles"};
inline constexpr OracleLimit kCycleMatchingLevelVertices{16, "cycle_matching_level"};

namespace detail {

inline unsigned lowest(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }

struct DisjointSets {
  explicit DisjointSets(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  unsigned find(unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<unsigned> parent;
};

inline std::uint64_t matchings(const Graph& g, Mask rest) {
  if (rest == 0) return 1;
  const unsigned v = lowest(rest);
  const Mask others = rest & ~(Mask{1} << v);
  std::uint64_t total = 0;
  for (Mask cand = g.neighbors(v) & others; cand != 0; cand &= cand - 1) {
    total += matchings(g, others & ~(Mask{1} << lowest(cand)));
  }
  return total;
}

// Grows oriented cycles from `start` inside `rest`; every closing of length
// >= 3 contributes the number of covers of the vertices left over.
inline BigInt covers(const Graph& g, Mask rest);

inline BigInt extend_cycle(const Graph& g, unsigned start, unsigned at, Mask used,
                           unsigned length, Mask rest) {
  BigInt total = 0;
  if (length >= 3 && g.adjacent(at, start)) total += covers(g, rest & ~used);
  for (Mask cand = g.neighbors(at) & rest & ~used; cand != 0; cand &= cand - 1) {
    const unsigned next = lowest(cand);
    total += extend_cycle(g, start, next, used | (Mask{1} << next), length + 1, rest);
  }
  return total;
}

inline BigInt covers(const Graph& g, Mask rest) {
  if (rest == 0) return 1;
  const unsigned v = lowest(rest);
  return extend_cycle(g, v, v, Mask{1} << v, 1, rest);
}

inline std::uint64_t hamiltonian_paths(const Graph& g, unsigned at, Mask used, unsigned length) {
  if (length == g.order()) return g.adjacent(at, 0) ? 1 : 0;
  std::uint64_t total = 0;
  for (Mask cand = g.neighbors(at) & ~used; cand != 0; cand &= cand - 1) {
    const unsigned next = lowest(cand);
    total += hamiltonian_paths(g, next, used | (Mask{1} << next), length + 1);
  }
  return total;
}

inline std::uint64_t closed_paths(const Graph& g, unsigned start, unsigned at, Mask used,
                                  unsigned length, unsigned k) {
  if (length == k) return g.adjacent(at, start) ? 1 : 0;
  std::uint64_t total = 0;
  const Mask above = ~full_mask(start + 1);
  for (Mask cand = g.neighbors(at) & ~used & above; cand != 0; cand &= cand - 1) {
    const unsigned next = lowest(cand);
    total += closed_paths(g, start, next, used | (Mask{1} << next), length + 1, k);
  }
  return total;
}

inline Mask subset_of(const Graph& g, const MultiIndex& i) {
  if (i.ambient() != g.order()) {
    throw DimensionError("oracle: vertex subset is not over the graph's vertex set");
  }
  return i.bits();
}

}  // namespace detail

/// Spanning trees by checking every (n-1)-edge subset for acyclicity.
inline BigCount count_spanning_trees_bruteforce(const Graph& g) {
  kSpanningTreeEdges.check(g.size());
  const unsigned n = g.order();
  if (n == 0) return 0;
  const std::size_t m = g.size();
  const std::size_t k = n - 1;
  if (k > m) return 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::uint64_t count = 0;
  while (true) {
    detail::DisjointSets ds(n);
    bool acyclic = true;
    for (std::size_t e : pick) {
      if (!ds.unite(g.edges()[e].first, g.edges()[e].second)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) ++count;
    // next combination
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == m - k + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

/// Undirected Hamiltonian cycles: closed paths from vertex 0, halved for the
/// two orientations.
inline BigCount count_hamiltonian_cycles_bruteforce(const Graph& g) {
  kHamiltonianVertices.check(g.order());
  if (g.order() < 3) return 0;
  return detail::hamiltonian_paths(g, 0, 1, 1) / 2;
}

/// M_I: perfect matchings of the subgraph induced by I.
inline BigCount count_perfect_matchings(const Graph& g, const MultiIndex& i) {
  kMatchingVertices.check(i.size());
  const Mask s = detail::subset_of(g, i);
  if ((i.size() & 1U) != 0) return 0;
  return detail::matchings(g, s);
}

/// X_I: covers of I by vertex-disjoint oriented cycles of length >= 3, each
/// orientation counted separately.
inline BigCount count_cycle_covers(const Graph& g, const MultiIndex& i) {
  kCycleCoverVertices.check(i.size());
  return detail::covers(g, detail::subset_of(g, i));
}

/// sum_{J subset of I} X_{I\J} M_J.
inline BigCount cycle_matching_covers(const Graph& g, const MultiIndex& i) {
  kCycleMatchingVertices.check(i.size());
  const Mask s = detail::subset_of(g, i);
  const unsigned n = g.order();
  BigInt total = 0;
  // Enumerate J over all submasks of s, including the empty one.
  for (Mask j = s;; j = (j - 1) & s) {
    const BigInt x = count_cycle_covers(g, MultiIndex(s & ~j, n));
    if (x != 0) total += x * count_perfect_matchings(g, MultiIndex(j, n));
    if (j == 0) break;
  }
  return total;
}

/// Cycle-matching covers summed over every k-subset of vertices.
inline BigCount cycle_matching_level(const Graph& g, unsigned k) {
  const unsigned n = g.order();
  if (k > n) throw RangeError("cycle_matching_level: level exceeds n");
  kCycleMatchingLevelVertices.check(n);
  kCycleMatchingVertices.check(k);
  BigInt total = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) == k) {
      total += cycle_matching_covers(g, MultiIndex(s, n));
    }
  }
  return total;
}

/// Undirected k-cycles: closed paths whose smallest vertex is the start,
/// halved for orientation.
inline BigCount enumerate_k_cycles(const Graph& g, unsigned k) {
  kKCycleVertices.check(g.order());
  if (k < 3 || k > g.order()) return 0;
  std::uint64_t total = 0;
  for (unsigned s = 0; s < g.order(); ++s) {
    total += detail::closed_paths(g, s, s, Mask{1} << s, 1, k);
  }
  return total / 2;
}

}  // namespace fzg::oracle
