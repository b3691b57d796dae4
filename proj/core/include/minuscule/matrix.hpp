#pragma once

#include <cstddef>
#include <vector>

#include "minuscule/vector.hpp"

namespace minuscule {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::vector<Vector> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  Vector& row(std::size_t i) { return rows_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector apply(const Vector& v) const;  // M v

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

struct RowReduction {
  std::size_t rank = 0;
  Matrix echelon;                       // reduced row-echelon form
  std::vector<std::size_t> pivot_columns;
};

// Exact Gauss-Jordan elimination in natural column order; deterministic
// (first nonzero entry pivots, no magnitude heuristics).
RowReduction row_reduce(Matrix m);

std::size_t rank_of(const Matrix& m);

}  // namespace minuscule
