#pragma once

// Exact determinant and permanent kernels.

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fzg {

inline constexpr std::size_t kNaivePermanentLimit = 10;

namespace detail {

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square()) {
    throw ShapeError(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact, so no rationals are needed. det of the 0x0 matrix is 1.
template <class T>
BigInt det(const Matrix<T>& m) {
  detail::require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix<BigInt> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = BigInt(m(i, j));

  bool negate = false;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Permanent by Ryser's inclusion-exclusion formula
///   per(A) = (-1)^n sum_{S subset of cols} (-1)^|S| prod_i sum_{j in S} a_ij
/// visiting column subsets in Gray-code order so each step updates the row
/// sums by a single column. per of the 0x0 matrix is 1.
template <class T>
BigInt per(const Matrix<T>& m) {
  detail::require_square(m, "per");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n >= 63) throw SizeLimitError("per: dimension too large for subset enumeration");

  std::vector<BigInt> row_sums(n, 0);
  BigInt total = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = ((gray >> col) & 1U) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += m(i, col);
      } else {
        row_sums[i] -= m(i, col);
      }
    }
    BigInt prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sums[i];
    if ((std::popcount(gray) & 1) != 0) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n & 1U) != 0 ? BigInt(-total) : total;
}

/// Direct sum over all permutations of [n]. Reference only; n <= 10.
template <class T>
BigInt per_naive(const Matrix<T>& m) {
  detail::require_square(m, "per_naive");
  const std::size_t n = m.rows();
  if (n > kNaivePermanentLimit) {
    throw SizeLimitError("per_naive: dimension " + std::to_string(n) + " exceeds " +
                         std::to_string(kNaivePermanentLimit));
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt total = 0;
  do {
    BigInt prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace fzg
