#pragma once

// Named graph families and graph enumeration used by the CLI corpus and the
// test suites.

#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fzg::corpus {

inline Graph complete(unsigned n) {
  std::vector<Edge> e;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(unsigned n) {
  if (n < 3) throw RangeError("cycle graph needs at least 3 vertices");
  std::vector<Edge> e;
  for (unsigned u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

inline Graph path(unsigned n) {
  std::vector<Edge> e;
  for (unsigned u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

/// Star with centre 0 and n-1 leaves.
inline Graph star(unsigned n) {
  std::vector<Edge> e;
  for (unsigned v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

/// Wheel: hub 0 joined to a rim cycle on 1..n-1.
inline Graph wheel(unsigned n) {
  if (n < 4) throw RangeError("wheel graph needs at least 4 vertices");
  std::vector<Edge> e;
  for (unsigned v = 1; v < n; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  return Graph(n, e);
}

inline Graph edgeless(unsigned n) { return Graph(n); }

inline Graph complete_bipartite(unsigned a, unsigned b) {
  std::vector<Edge> e;
  for (unsigned u = 0; u < a; ++u)
    for (unsigned v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (unsigned i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

/// 3-cube: vertices are 3-bit words, edges join words at Hamming distance 1.
inline Graph cube() {
  std::vector<Edge> e;
  for (unsigned u = 0; u < 8; ++u)
    for (unsigned b = 0; b < 3; ++b)
      if (const unsigned v = u ^ (1U << b); u < v) e.emplace_back(u, v);
  return Graph(8, e);
}

/// Disjoint union, second graph relabelled after the first.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const auto& [u, v] : b.edges()) e.emplace_back(a.order() + u, a.order() + v);
  return Graph(a.order() + b.order(), e);
}

/// Parses names such as "K4", "C7", "P5", "S6", "W5", "E3" (edgeless),
/// "K3,3", "petersen" and "cube".
inline Graph by_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "petersen") return petersen();
  if (lower == "cube" || lower == "q3") return cube();
  auto number = [&](std::string_view digits) {
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || p != digits.data() + digits.size()) {
      throw RangeError("unknown graph name '" + std::string(name) + "'");
    }
    return v;
  };
  if (lower.size() < 2) throw RangeError("unknown graph name '" + std::string(name) + "'");
  const std::string_view rest = std::string_view(lower).substr(1);
  switch (lower.front()) {
    case 'k': {
      if (const auto comma = rest.find(','); comma != std::string_view::npos) {
        return complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
      }
      return complete(number(rest));
    }
    case 'c': return cycle(number(rest));
    case 'p': return path(number(rest));
    case 's': return star(number(rest));
    case 'w': return wheel(number(rest));
    case 'e': return edgeless(number(rest));
    default: throw RangeError("unknown graph name '" + std::string(name) + "'");
  }
}

/// The small named corpus checked by `verify --corpus`.
inline std::vector<std::pair<std::string, Graph>> builtin() {
  std::vector<std::pair<std::string, Graph>> out;
  for (const char* name : {"K3", "K4", "K5", "K6", "C4", "C5", "C7", "P4", "S5", "W6",
                           "K3,3", "E4", "cube", "petersen"}) {
    out.emplace_back(name, by_name(name));
  }
  return out;
}

namespace detail {

struct Invariant {
  std::vector<std::pair<unsigned, std::vector<unsigned>>> profile;
  friend bool operator<(const Invariant& a, const Invariant& b) { return a.profile < b.profile; }
};

// Degree of each vertex with the sorted degrees of its neighbours.
inline Invariant invariant(const Graph& g) {
  Invariant inv;
  for (unsigned v = 0; v < g.order(); ++v) {
    std::vector<unsigned> nd;
    for (Mask m = g.neighbors(v); m != 0; m &= m - 1) {
      nd.push_back(g.degree(static_cast<unsigned>(std::countr_zero(m))));
    }
    std::sort(nd.begin(), nd.end());
    inv.profile.emplace_back(g.degree(v), std::move(nd));
  }
  std::sort(inv.profile.begin(), inv.profile.end());
  return inv;
}

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                               Mask used, unsigned v) {
  if (v == a.order()) return true;
  for (unsigned w = 0; w < b.order(); ++w) {
    if (((used >> w) & 1U) != 0 || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (unsigned u = 0; u < v && ok; ++u) {
      ok = a.adjacent(u, v) == b.adjacent(static_cast<unsigned>(map[u]), w);
    }
    if (!ok) continue;
    map[v] = static_cast<int>(w);
    if (extend_isomorphism(a, b, map, used | (Mask{1} << w), v + 1)) return true;
  }
  return false;
}

}  // namespace detail

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> map(a.order(), -1);
  return detail::extend_isomorphism(a, b, map, 0, 0);
}

/// One representative of every isomorphism class of graphs on n vertices,
/// built by adding a vertex to each class on n-1 vertices in every possible
/// way and discarding isomorphic duplicates. Practical for n <= 8.
inline std::vector<Graph> all_graphs(unsigned n) {
  if (n == 0) return {Graph(0)};
  if (n > 8) throw SizeLimitError("all_graphs: n > 8 is not supported");
  std::vector<Graph> classes{Graph(1)};
  for (unsigned order = 2; order <= n; ++order) {
    std::map<detail::Invariant, std::vector<Graph>> buckets;
    for (const Graph& base : classes) {
      for (Mask nbrs = 0; nbrs < (Mask{1} << (order - 1)); ++nbrs) {
        std::vector<Edge> e = base.edges();
        for (Mask m = nbrs; m != 0; m &= m - 1) {
          e.emplace_back(static_cast<unsigned>(std::countr_zero(m)), order - 1);
        }
        Graph cand(order, e);
        auto& bucket = buckets[detail::invariant(cand)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](const Graph& g) { return isomorphic(g, cand); });
        if (!seen) bucket.push_back(std::move(cand));
      }
    }
    classes.clear();
    for (auto& [inv, graphs] : buckets) {
      for (auto& g : graphs) classes.push_back(std::move(g));
    }
  }
  return classes;
}

inline std::vector<Graph> connected_graphs(unsigned n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Erdos-Renyi sample with edge probability drawn from [0.25, 0.9], resampled
/// until connected.
template <class Rng>
Graph random_connected(unsigned n, Rng& rng) {
  std::uniform_real_distribution<double> prob(0.25, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    const double p = prob(rng);
    std::vector<Edge> e;
    for (unsigned u = 0; u < n; ++u)
      for (unsigned v = u + 1; v < n; ++v)
        if (coin(rng) < p) e.emplace_back(u, v);
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
}

/// Erdos-Renyi sample with edge probability p (may be disconnected).
template <class Rng>
Graph random_graph(unsigned n, double p, Rng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> e;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace fzg::corpus
