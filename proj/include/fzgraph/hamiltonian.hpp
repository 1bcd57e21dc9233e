#pragma once

// Hamiltonian cycle counts from determinant/permanent convolutions over the
// subset lattice. Three formulations are provided:
//
//   fermion-zeon trace   2n H = sum_J sigma(J) <v_J|Phi|v_J> <v_J|Xi*|v_J>
//   Liu                  2n H = sum_I (-1)^(n-|I|) |I| per(A_I) det(A_I')
//   Goulden-Jackson      2H   = sum_{I not containing c} (-1)^|I| det(A_I) per(A_I')
//
// plus the convolution integral, which extracts the same determinants and
// permanents as blade coefficients of Clifford and zeon products.
//
// Each raw sum counts closed Hamiltonian walks with a weight; for n < 3 the
// single 2-cycle of K2 is a directed circuit but not a cycle of a simple
// graph, so the undirected counts below return 0 for n < 3 without dividing.

#include "fzgraph/algebra.hpp"
#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/graph.hpp"
#include "fzgraph/induced.hpp"
#include "fzgraph/lattice.hpp"
#include "fzgraph/linalg.hpp"
#include "fzgraph/matrix.hpp"

#include <string>

namespace fzg {

namespace detail {

inline BigCount divide_exactly(const BigInt& sum, const BigInt& divisor, const char* what) {
  if (sum % divisor != 0) {
    throw ConsistencyError(std::string(what) + ": sum " + sum.str() +
                           " is not divisible by " + divisor.str());
  }
  return sum / divisor;
}

}  // namespace detail

/// tr(sigma Phi (.) Xi*) for the operators induced by A; equals 2n H_c for n >= 3.
inline BigInt fz_trace_sum(const Graph& g, const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  require_lattice_size(n, opts, "fz_trace_sum");
  const IntMatrix a = adjacency(g);
  return subset_sum(
      n,
      [&](Mask s) -> BigInt {
        const MultiIndex j(s, n);
        const BigInt weight = sigma_diag(j, n);
        if (weight == 0) return 0;
        const BigInt phi = fermion_entry(a, j, j);
        if (phi == 0) return 0;
        return weight * phi * star_dual_entry(a, j, j);
      },
      opts);
}

inline BigCount hamiltonian_fz_trace(const Graph& g, const EvalOptions& opts = {}) {
  const BigInt sum = fz_trace_sum(g, opts);
  if (g.order() < 3) return 0;
  return detail::divide_exactly(sum, 2 * BigInt(g.order()), "hamiltonian_fz_trace");
}

/// sum_I (-1)^(n-|I|) |I| per(A_I) det(A_I'); equals 2n H_c for n >= 3.
inline BigInt liu_sum(const Graph& g, const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  require_lattice_size(n, opts, "liu_sum");
  const IntMatrix a = adjacency(g);
  return subset_sum(
      n,
      [&](Mask s) -> BigInt {
        const MultiIndex i(s, n);
        if (i.is_empty()) return 0;
        const BigInt d = det(submatrix(a, i.complement(), i.complement()));
        if (d == 0) return 0;
        BigInt term = BigInt(i.size()) * per(submatrix(a, i, i)) * d;
        return ((n - i.size()) & 1U) != 0 ? BigInt(-term) : term;
      },
      opts);
}

inline BigCount hamiltonian_liu(const Graph& g, const EvalOptions& opts = {}) {
  const BigInt sum = liu_sum(g, opts);
  if (g.order() < 3) return 0;
  return detail::divide_exactly(sum, 2 * BigInt(g.order()), "hamiltonian_liu");
}

/// Number of directed Hamiltonian circuits, summing over subsets that omit
/// the anchor vertex c. Equals 2 H_c for n >= 3.
inline BigCount hamiltonian_goulden_jackson(const Graph& g, unsigned c,
                                            const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  if (c >= n) {
    throw RangeError("hamiltonian_goulden_jackson: anchor " + std::to_string(c) +
                     " outside [0, " + std::to_string(n) + ")");
  }
  require_lattice_size(n, opts, "hamiltonian_goulden_jackson");
  const IntMatrix a = adjacency(g);
  return subset_sum(
      n,
      [&](Mask s) -> BigInt {
        const MultiIndex i(s, n);
        if (i.contains(c)) return 0;
        const BigInt d = det(submatrix(a, i, i));
        if (d == 0) return 0;
        BigInt term = d * per(submatrix(a, i.complement(), i.complement()));
        return (i.size() & 1U) != 0 ? BigInt(-term) : term;
      },
      opts);
}

/// Fermion-zeon convolution integral: for each J, the coefficient of gamma_J
/// in the Clifford product of the rows of A indexed by J, times the
/// coefficient of zeta_J' in the zeon product of the rows indexed by J',
/// weighted by sigma(J). Equals 2n H_c for n >= 3.
inline BigInt fz_integral_sum(const Graph& g, const EvalOptions& opts = {}) {
  const unsigned n = g.order();
  require_lattice_size(n, opts, "fz_integral_sum");
  const IntMatrix a = adjacency(g);
  std::vector<CliffordElement> fermion_rows;
  std::vector<ZeonElement> zeon_rows;
  for (unsigned r = 0; r < n; ++r) {
    fermion_rows.push_back(vector_from_row<CliffordElement>(a.row(r)));
    zeon_rows.push_back(vector_from_row<ZeonElement>(a.row(r)));
  }
  return subset_sum(
      n,
      [&](Mask s) -> BigInt {
        const MultiIndex j(s, n);
        const BigInt weight = sigma_diag(j, n);
        if (weight == 0) return 0;
        CliffordElement phi = CliffordElement::scalar(n, 1);
        for (unsigned r : j.elements()) phi = phi * fermion_rows[r];
        const BigInt fermion_coeff = coefficient(phi, j);
        if (fermion_coeff == 0) return 0;
        ZeonElement xi = ZeonElement::scalar(n, 1);
        for (unsigned r : j.complement().elements()) xi = xi * zeon_rows[r];
        return weight * fermion_coeff * coefficient(xi, j.complement());
      },
      opts);
}

inline BigCount fz_convolution_integral(const Graph& g, const EvalOptions& opts = {}) {
  const BigInt sum = fz_integral_sum(g, opts);
  if (g.order() < 3) return 0;
  return detail::divide_exactly(sum, 2 * BigInt(g.order()), "fz_convolution_integral");
}

}  // namespace fzg
