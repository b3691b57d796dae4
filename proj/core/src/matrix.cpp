#include "minuscule/matrix.hpp"

namespace minuscule {

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  rows_.assign(rows, Vector(cols));
}

Matrix::Matrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_[0].size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionMismatch("matrix rows of unequal length");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows()) throw DimensionMismatch("matrix product with mismatched shapes");
  Matrix out(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols(); ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += a * o.at(k, j);
      }
    }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product with mismatched shapes");
  Vector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

std::size_t Matrix::hash() const {
  std::size_t h = 0x811c9dc5u ^ cols_;
  for (const auto& r : rows_) {
    h ^= r.hash();
    h *= 1099511628211ull;
  }
  return h;
}

RowReduction row_reduce(Matrix m) {
  RowReduction out;
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t piv = lead;
    while (piv < nrows && m.at(piv, col).is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(m.row(piv), m.row(lead));
    const Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < ncols; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < ncols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.rank = out.pivot_columns.size();
  out.echelon = std::move(m);
  return out;
}

std::size_t rank_of(const Matrix& m) { return row_reduce(m).rank; }

}  // namespace minuscule
