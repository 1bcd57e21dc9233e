#pragma once

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/matrix.hpp"
#include "fzgraph/multi_index.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fzg {

using Edge = std::pair<unsigned, unsigned>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
/// sorted; loops and repeated pairs are rejected at construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(unsigned n) : n_(check_order(n)), nbr_(n, 0) {}

  Graph(unsigned n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
    std::sort(edges_.begin(), edges_.end());
  }

  unsigned order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(unsigned u, unsigned v) const noexcept {
    return u < n_ && v < n_ && ((nbr_[u] >> v) & 1U) != 0;
  }
  /// Neighbours of v as a vertex mask.
  Mask neighbors(unsigned v) const { return nbr_.at(v); }
  unsigned degree(unsigned v) const {
    return static_cast<unsigned>(std::popcount(nbr_.at(v)));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph parse_edge_list(std::istream&, std::optional<unsigned>);

  static unsigned check_order(unsigned n) {
    if (n > kMaxGenerators) {
      throw SizeLimitError("graph order " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(kMaxGenerators));
    }
    return n;
  }

  // Throws FormatError; callers reading text rethrow with the line number.
  void add_edge(unsigned u, unsigned v) {
    if (u >= n_ || v >= n_) {
      throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} outside vertex range [0, " + std::to_string(n_) + ")");
    }
    if (u == v) throw FormatError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw FormatError("duplicate edge {" + std::to_string(std::min(u, v)) +
                        "," + std::to_string(std::max(u, v)) + "}");
    }
    nbr_[u] |= Mask{1} << v;
    nbr_[v] |= Mask{1} << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  unsigned n_ = 0;
  std::vector<Mask> nbr_;
  std::vector<Edge> edges_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline unsigned parse_vertex_id(std::string_view tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError(line, "malformed vertex id '" + std::string(tok) + "'");
  }
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "vertex id '" + std::string(tok) + "' out of range");
  }
  return v;
}

}  // namespace detail

/// Reads the edge-list format: one "u v" pair of decimal 0-based vertex ids
/// per line; blank lines and lines starting with '#' are skipped. Without an
/// override the order is 1 + the largest id seen.
inline Graph parse_edge_list(std::istream& in,
                             std::optional<unsigned> vertices_override = std::nullopt) {
  std::vector<std::pair<Edge, std::size_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  unsigned max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream toks{std::string(body)};
    std::string a, b, extra;
    if (!(toks >> a >> b) || (toks >> extra)) {
      throw ParseError(lineno, "expected exactly two vertex ids");
    }
    const unsigned u = detail::parse_vertex_id(a, lineno);
    const unsigned v = detail::parse_vertex_id(b, lineno);
    if (vertices_override && (u >= *vertices_override || v >= *vertices_override)) {
      throw RangeError("line " + std::to_string(lineno) + ": vertex id " +
                       std::to_string(std::max(u, v)) + " >= vertex count " +
                       std::to_string(*vertices_override));
    }
    max_id = std::max({max_id, u, v});
    any = true;
    raw.push_back({{u, v}, lineno});
  }
  unsigned n = 0;
  if (vertices_override) {
    n = *vertices_override;
  } else if (any) {
    if (max_id >= kMaxGenerators) {
      throw SizeLimitError("vertex id " + std::to_string(max_id) +
                           " implies more than " + std::to_string(kMaxGenerators) +
                           " vertices");
    }
    n = max_id + 1;
  }
  Graph g(n);
  for (const auto& [e, ln] : raw) {
    try {
      g.add_edge(e.first, e.second);
    } catch (const FormatError& err) {
      throw FormatError(ln, err.what());
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

inline Graph parse_edge_list(const std::string& text,
                             std::optional<unsigned> vertices_override = std::nullopt) {
  std::istringstream in(text);
  return parse_edge_list(in, vertices_override);
}

/// Inverse of parse_edge_list given the vertex count (isolated high-numbered
/// vertices are not recoverable from the edge lines alone).
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# vertices " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

/// Combinatorial Laplacian L = D - A.
inline IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
  }
  for (unsigned i = 0; i < g.order(); ++i) l(i, i) = g.degree(i);
  return l;
}

inline IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.order(), g.order());
  for (unsigned i = 0; i < g.order(); ++i) d(i, i) = g.degree(i);
  return d;
}

/// Subgraph induced by the vertex set `keep`, relabelled to 0..|keep|-1 in
/// ascending order.
inline Graph induced_subgraph(const Graph& g, const MultiIndex& keep) {
  const auto verts = keep.elements();
  std::vector<unsigned> relabel(g.order(), 0);
  for (unsigned i = 0; i < verts.size(); ++i) relabel[verts[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Graph(static_cast<unsigned>(verts.size()), edges);
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  Mask seen = 1, frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(static_cast<unsigned>(std::countr_zero(f)));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask(g.order());
}

/// Graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<unsigned>& perm) {
  if (perm.size() != g.order()) throw RangeError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace fzg
