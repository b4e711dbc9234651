#ifndef LAT_MATRIX_HPP
#define LAT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lat/number.hpp"

namespace lat {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using IntMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

// Matrix whose columns are the given vectors (all of length `dim`).
IntMatrix from_columns(std::size_t dim, const std::vector<std::vector<std::int64_t>>& cols);

// Horizontal concatenation [a | b].
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

// Exact inverse; throws std::domain_error for singular input.
RationalMatrix inverse(const IntMatrix& m);
RationalMatrix inverse(const RationalMatrix& m);

// Solves a x = b exactly for square nonsingular a; std::nullopt when singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

RationalMatrix to_rational(const IntMatrix& m);

// Integer matrix equal to `m`, or std::nullopt if some entry is not integral.
std::optional<IntMatrix> to_integer(const RationalMatrix& m);

// Inverse of a unimodular integer matrix; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Basis (as matrix columns) of the saturated integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Incrementally maintained row Hermite basis of the Z-span of inserted
// integer vectors.
class LatticeSpan {
 public:
  explicit LatticeSpan(std::size_t dim);

  void insert(std::span<const std::int64_t> v);
  void insert(std::span<const Integer> v);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }

  // True once the span is all of Z^dim; further inserts are no-ops.
  bool is_everything() const { return everything_; }

  // Product of pivots: the index in Z^dim when the span has full rank.
  Integer index() const;

  // Basis vectors as matrix columns (dim x rank).
  IntMatrix basis() const;

 private:
  void insert_owned(IntVector v);

  std::size_t dim_;
  std::size_t rank_ = 0;
  bool everything_ = false;
  // rows_[p] is either empty or the basis row whose leading entry sits at
  // column p (positive).
  std::vector<IntVector> rows_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace lat

#endif  // LAT_MATRIX_HPP
