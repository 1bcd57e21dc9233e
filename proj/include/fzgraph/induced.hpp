#pragma once

// Operators induced on the fermion (Clifford) and zeon algebras by a matrix M
// acting on the span of the vertices. Matrix elements are grade preserving:
//   <v_I| Phi |v_J> = det(M_{I,J}),   <v_I| Xi |v_J> = per(M_{I,J}),
// for |I| = |J|. These are the top-grade coefficients of the product of the
// row vectors of M indexed by I (see algebra.hpp).

#include "fzgraph/algebra.hpp"
#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"
#include "fzgraph/lattice.hpp"
#include "fzgraph/linalg.hpp"
#include "fzgraph/matrix.hpp"
#include "fzgraph/multi_index.hpp"

#include <string>

namespace fzg {

namespace detail {

inline void require_same_grade(const MultiIndex& i, const MultiIndex& j, const char* what) {
  if (i.size() != j.size()) {
    throw GradeError(std::string(what) + ": |I| = " + std::to_string(i.size()) +
                     " but |J| = " + std::to_string(j.size()));
  }
}

inline void require_square_order(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + ": matrix must be square");
  if (m.rows() > kMaxGenerators) {
    throw SizeLimitError(std::string(what) + ": matrix order exceeds the generator cap");
  }
}

}  // namespace detail

/// <v_I| Phi |v_J> for the operator Phi induced on the fermion algebra by M.
inline BigInt fermion_entry(const IntMatrix& m, const MultiIndex& i, const MultiIndex& j) {
  detail::require_same_grade(i, j, "fermion_entry");
  return det(submatrix(m, i, j));
}

/// <v_I| Xi |v_J> for the operator Xi induced on the zeon algebra by M.
inline BigInt zeon_entry(const IntMatrix& m, const MultiIndex& i, const MultiIndex& j) {
  detail::require_same_grade(i, j, "zeon_entry");
  return per(submatrix(m, i, j));
}

/// A single induced-operator matrix element.
struct InducedEntrySpec {
  Flavor flavor;
  MultiIndex row;
  MultiIndex col;
};

inline BigInt matrix_element(const IntMatrix& m, const InducedEntrySpec& spec) {
  return spec.flavor == Flavor::fermion ? fermion_entry(m, spec.row, spec.col)
                                        : zeon_entry(m, spec.row, spec.col);
}

/// Unnormalized trace of Phi^(k): sum of principal k-minors of M.
inline BigInt fermion_level_trace(const IntMatrix& m, unsigned k, const EvalOptions& opts = {}) {
  detail::require_square_order(m, "fermion_level_trace");
  const auto n = static_cast<unsigned>(m.rows());
  if (k > n) throw RangeError("fermion_level_trace: level exceeds n");
  return graded_subset_sum(
      n, k,
      [&](Mask s) {
        const MultiIndex idx(s, n);
        return fermion_entry(m, idx, idx);
      },
      opts);
}

/// Tr(Phi^(k)) normalized by the dimension C(n, k) of the grade-k subspace.
inline BigRational fermion_level_trace_normalized(const IntMatrix& m, unsigned k,
                                                  const EvalOptions& opts = {}) {
  const BigInt sum = fermion_level_trace(m, k, opts);
  const auto dim = binomial(static_cast<unsigned>(m.rows()), k);
  return BigRational(sum, BigInt(*dim));
}

/// tr(Xi^(k)), unnormalized: sum of principal k-permanents of M.
inline BigInt zeon_level_trace(const IntMatrix& m, unsigned k, const EvalOptions& opts = {}) {
  detail::require_square_order(m, "zeon_level_trace");
  const auto n = static_cast<unsigned>(m.rows());
  if (k > n) throw RangeError("zeon_level_trace: level exceeds n");
  require_lattice_size(n, opts, "zeon_level_trace");
  return graded_subset_sum(
      n, k,
      [&](Mask s) {
        const MultiIndex idx(s, n);
        return zeon_entry(m, idx, idx);
      },
      opts);
}

/// Number of spanning trees as the normalized fermion trace of the Laplacian
/// at level n-1. Throws ConsistencyError if the trace is not an integer.
inline BigCount spanning_tree_count(const Graph& g, const EvalOptions& opts = {}) {
  if (g.order() == 0) throw RangeError("spanning_tree_count: graph has no vertices");
  const BigRational tr = fermion_level_trace_normalized(laplacian(g), g.order() - 1, opts);
  if (denominator(tr) != 1) {
    throw ConsistencyError("normalized fermion trace " + tr.str() + " is not an integer");
  }
  return numerator(tr);
}

/// det(L) with row and column c deleted.
inline BigCount kirchhoff_cofactor(const Graph& g, unsigned c) {
  if (c >= g.order()) {
    throw RangeError("kirchhoff_cofactor: vertex " + std::to_string(c) + " outside [0, " +
                     std::to_string(g.order()) + ")");
  }
  return det(minor_matrix(laplacian(g), c, c));
}

/// <v_[n]| Xi |v_[n]> = tr(Xi^(n)) = per(A): the cycle-matching cover count.
inline BigCount cycle_matching_convolution(const Graph& g, const EvalOptions& opts = {}) {
  return zeon_level_trace(adjacency(g), g.order(), opts);
}

/// <v_I| Xi* |v_J> = <v_I'| Xi |v_J'>.
inline BigInt star_dual_entry(const IntMatrix& m, const MultiIndex& i, const MultiIndex& j) {
  const MultiIndex ic = i.complement();
  const MultiIndex jc = j.complement();
  detail::require_same_grade(ic, jc, "star_dual_entry");
  return zeon_entry(m, ic, jc);
}

/// <v_I| sigma |v_I> = (-1)^|I| |I'|.
inline BigInt sigma_diag(const MultiIndex& i, unsigned n) {
  if (i.ambient() != n) throw DimensionError("sigma_diag: multi-index not over [n]");
  const long long rest = static_cast<long long>(n - i.size());
  return (i.size() & 1U) != 0 ? BigInt(-rest) : BigInt(rest);
}

}  // namespace fzg
