#include "qcat/matrix.hpp"

namespace qcat {

Matrix Matrix::from_rows(const std::vector<std::vector<QVal>>& rows, std::size_t expected_cols) {
  std::size_t cols = expected_cols;
  if (cols == npos) cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::vector<QVal>> Matrix::to_rows() const {
  std::vector<std::vector<QVal>> out(rows_, std::vector<QVal>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

bool matrix_leq(const Quantale& q, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!q.leq(a(r, c), b(r, c))) return false;
  return true;
}

bool matrix_equiv(const Quantale& q, const Matrix& a, const Matrix& b) {
  return matrix_leq(q, a, b) && matrix_leq(q, b, a);
}

}  // namespace qcat
