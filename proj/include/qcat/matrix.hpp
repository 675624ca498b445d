#ifndef QCAT_MATRIX_HPP
#define QCAT_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qcat/quantale.hpp"

namespace qcat {

/// Dense row-major matrix of quantale values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const QVal& fill = QVal::bot())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; throws InputError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<QVal>>& rows, std::size_t expected_cols = npos);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const QVal& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  QVal& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  std::vector<std::vector<QVal>> to_rows() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  /// Lexicographic over (rows, cols, entries in row-major order).
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QVal> data_;
};

/// Entrywise leq under the quantale's tolerance.
bool matrix_leq(const Quantale& q, const Matrix& a, const Matrix& b);
/// Mutual entrywise leq under tolerance.
bool matrix_equiv(const Quantale& q, const Matrix& a, const Matrix& b);

/// One failed inequality `lhs <= rhs`. `indices` names the objects involved,
/// in the order the law quantifies over them.
struct Violation {
  std::string law;
  std::vector<std::size_t> indices;
  QVal lhs;
  QVal rhs;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace qcat

#endif
