#pragma once

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/multi_index.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fzg {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

/// M restricted to the rows in `rowset` and columns in `colset`, both taken in
/// ascending order. submatrix(M, {}, {}) is the 0x0 matrix.
template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const MultiIndex& rowset,
                    const MultiIndex& colset) {
  if ((rowset.bits() & ~full_mask(static_cast<unsigned>(std::min<std::size_t>(m.rows(), 64)))) != 0 ||
      (colset.bits() & ~full_mask(static_cast<unsigned>(std::min<std::size_t>(m.cols(), 64)))) != 0) {
    throw RangeError("submatrix: index outside " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + " matrix");
  }
  const auto rs = rowset.elements();
  const auto cs = colset.elements();
  Matrix<T> out(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = m(rs[i], cs[j]);
  return out;
}

/// M with row r and column c removed.
template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t r, std::size_t c) {
  if (r >= m.rows() || c >= m.cols()) throw RangeError("minor: index out of range");
  Matrix<T> out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace fzg
