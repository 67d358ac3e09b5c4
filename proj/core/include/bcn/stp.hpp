#pragma once

// Canonical vectors, logical matrices and the semi-tensor product.
//
// Indices that name a canonical vector e_k^i (state and input indices,
// entries of a LogicalMatrix) are 1-based throughout the public API. Raw
// element access on BoolMatrix and DenseMatrix is 0-based (row, col) like any
// other matrix container.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcn {

using Index = std::uint64_t;

// e_{2^k}^index for a list of k truth values, TRUE-first: all TRUE maps to 1,
// all FALSE to 2^k.
Index canonical_index(const std::vector<bool>& bits);

// Inverse of canonical_index. Throws std::out_of_range unless
// 1 <= index <= 2^k.
std::vector<bool> index_to_bits(Index index, unsigned k);

// Same convention on k bits packed most-significant-first into an integer.
constexpr Index canonical_index_packed(std::uint64_t bits, unsigned k) {
  return (Index{1} << k) - bits;
}
constexpr std::uint64_t packed_bits(Index index, unsigned k) {
  return (std::uint64_t{1} << k) - index;
}

// e_p^i ⋉ e_q^j = e_{pq}^{(i-1)q+j}. Throws std::out_of_range on bad indices.
Index stp_canonical(Index i, std::size_t p, Index j, std::size_t q);

class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Row-major entries.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t k);
  // The column vector e_k^i.
  static DenseMatrix canonical(std::size_t k, Index i);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Ordinary product; throws std::invalid_argument on inner-dimension mismatch.
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Semi-tensor product: with t = lcm(a.cols, b.rows),
// (a ⊗ I_{t/a.cols}) (b ⊗ I_{t/b.rows}).
DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b);

// 0/1 matrix in compressed sparse column form. Transition matrices have at
// most 2^m ones per column, so this stays proportional to the column count.
class BoolMatrix {
 public:
  // All zeros.
  BoolMatrix(std::size_t rows, std::size_t cols);

  // `columns[c]` lists the 0-based rows set in column c, in any order;
  // duplicates are merged.
  static BoolMatrix from_columns(
      std::size_t rows, std::vector<std::vector<std::uint32_t>> columns);
  // One string of '0'/'1' per row; all rows must have equal length.
  static BoolMatrix from_rows(const std::vector<std::string>& rows);
  static BoolMatrix ones(std::size_t rows, std::size_t cols);
  static BoolMatrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return col_start_.size() - 1; }

  bool test(std::size_t r, std::size_t c) const;
  // Sorted 0-based rows of the ones in column c.
  std::span<const std::uint32_t> column(std::size_t c) const {
    return {row_index_.data() + col_start_[c],
            row_index_.data() + col_start_[c + 1]};
  }
  std::size_t column_count(std::size_t c) const {
    return col_start_[c + 1] - col_start_[c];
  }
  std::size_t nnz() const noexcept { return row_index_.size(); }
  bool is_all_ones() const noexcept { return nnz() == rows_ * cols(); }

  std::string row_string(std::size_t r) const;
  std::vector<std::string> row_strings() const;

  // Rows and columns picked by 0-based index lists, in the given order.
  BoolMatrix submatrix(std::span<const std::uint32_t> row_ids,
                       std::span<const std::uint32_t> col_ids) const;

  DenseMatrix to_dense() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  BoolMatrix() = default;

  std::size_t rows_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<std::uint32_t> row_index_;
};

// Entrywise OR; throws std::invalid_argument on dimension mismatch.
BoolMatrix bool_or(const BoolMatrix& a, const BoolMatrix& b);

// A matrix whose every column is a canonical vector, stored as one row index
// per column.
class LogicalMatrix {
 public:
  // `col_index[j]` is the 1-based row of the one in column j+1. Throws
  // std::out_of_range if an entry is outside [1, rows].
  LogicalMatrix(std::size_t rows, const std::vector<Index>& col_index);

  // Construction from 0-based rows, as produced by compile.
  static LogicalMatrix from_zero_based(std::size_t rows,
                                       std::vector<std::uint32_t> targets);
  static LogicalMatrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return targets_.size(); }

  // 1-based row of the one in 1-based column j.
  Index operator[](Index j) const { return Index{targets_.at(j - 1)} + 1; }
  std::vector<Index> col_index() const;
  std::span<const std::uint32_t> zero_based() const noexcept {
    return targets_;
  }

  // Columns [first, first + count), 0-based.
  LogicalMatrix block(std::size_t first, std::size_t count) const;

  BoolMatrix to_bool() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  LogicalMatrix() = default;

  std::size_t rows_ = 0;
  std::vector<std::uint32_t> targets_;
};

}  // namespace bcn
