#pragma once

#include "fzgraph/algebra.hpp"
#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"
#include "fzgraph/lattice.hpp"

#include <string>
#include <vector>

namespace fzg {

/// Square matrix with zeon entries.
class ZeonMatrix {
 public:
  ZeonMatrix() = default;
  explicit ZeonMatrix(unsigned n) : n_(n), entries_(std::size_t{n} * n, ZeonElement(n)) {}

  unsigned order() const noexcept { return n_; }
  ZeonElement& operator()(unsigned i, unsigned j) { return entries_[std::size_t{i} * n_ + j]; }
  const ZeonElement& operator()(unsigned i, unsigned j) const {
    return entries_[std::size_t{i} * n_ + j];
  }

  ZeonElement trace() const {
    ZeonElement t(n_);
    for (unsigned i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend ZeonMatrix operator*(const ZeonMatrix& a, const ZeonMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("zeon matrix product: order mismatch");
    ZeonMatrix out(a.n_);
    for (unsigned i = 0; i < a.n_; ++i) {
      for (unsigned l = 0; l < a.n_; ++l) {
        const ZeonElement& left = a(i, l);
        if (left.is_zero()) continue;
        for (unsigned j = 0; j < a.n_; ++j) {
          const ZeonElement& right = b(l, j);
          if (!right.is_zero()) out(i, j) += left * right;
        }
      }
    }
    return out;
  }

  friend bool operator==(const ZeonMatrix&, const ZeonMatrix&) = default;

 private:
  unsigned n_ = 0;
  std::vector<ZeonElement> entries_;
};

/// Adjacency matrix with entry (i, j) = zeta_j for each edge {i, j}. Its k-th
/// power weights each k-walk by the product of the generators it enters, so
/// any walk revisiting a vertex vanishes.
class NilpotentMatrix {
 public:
  explicit NilpotentMatrix(const Graph& g) : m_(g.order()) {
    const unsigned n = g.order();
    for (const auto& [u, v] : g.edges()) {
      m_(u, v) = ZeonElement::generator(v, n);
      m_(v, u) = ZeonElement::generator(u, n);
    }
  }

  unsigned order() const noexcept { return m_.order(); }
  const ZeonElement& operator()(unsigned i, unsigned j) const { return m_(i, j); }
  const ZeonMatrix& matrix() const noexcept { return m_; }

 private:
  ZeonMatrix m_;
};

inline NilpotentMatrix nilpotent_adjacency(const Graph& g) { return NilpotentMatrix(g); }

/// tr(A^k) for the nilpotent adjacency matrix, 1 <= k <= n.
inline ZeonElement nilpotent_trace_power(const Graph& g, unsigned k, const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  if (k < 1 || k > n) {
    throw RangeError("nilpotent_trace_power: power " + std::to_string(k) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  require_lattice_size(n, opts, "nilpotent_trace_power");
  const NilpotentMatrix a(g);
  ZeonMatrix power = a.matrix();
  for (unsigned step = 1; step < k; ++step) power = power * a.matrix();
  return power.trace();
}

/// Hamiltonian cycles from tr(A^n) = 2n H_c zeta_[n].
inline BigCount hamiltonian_nilpotent(const Graph& g, const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  if (n < 3) return 0;
  const ZeonElement tr = nilpotent_trace_power(g, n, opts);
  const MultiIndex top = MultiIndex::full(n);
  if (tr.terms().size() > 1 || (!tr.is_zero() && tr.terms().front().first != top.bits())) {
    throw ConsistencyError("tr(A^n) has support outside the top blade: " + tr.to_string());
  }
  const BigInt c = coefficient(tr, top);
  const BigInt divisor = 2 * BigInt(n);
  if (c % divisor != 0) {
    throw ConsistencyError("tr(A^n) coefficient " + c.str() + " is not divisible by " +
                           divisor.str());
  }
  return c / divisor;
}

}  // namespace fzg
