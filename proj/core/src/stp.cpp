#include "bcn/stp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcn {

Index canonical_index(const std::vector<bool>& bits) {
  const auto k = static_cast<unsigned>(bits.size());
  std::uint64_t packed = 0;
  for (bool b : bits) packed = (packed << 1) | (b ? 1U : 0U);
  return canonical_index_packed(packed, k);
}

std::vector<bool> index_to_bits(Index index, unsigned k) {
  if (k >= 64 || index < 1 || index > (Index{1} << k)) {
    throw std::out_of_range("canonical index " + std::to_string(index) +
                            " out of range for " + std::to_string(k) +
                            " bits");
  }
  const std::uint64_t packed = packed_bits(index, k);
  std::vector<bool> bits(k);
  for (unsigned i = 0; i < k; ++i) bits[i] = (packed >> (k - 1 - i)) & 1U;
  return bits;
}

Index stp_canonical(Index i, std::size_t p, Index j, std::size_t q) {
  if (i < 1 || i > p || j < 1 || j > q) {
    throw std::out_of_range("canonical vector index out of range");
  }
  return (i - 1) * q + j;
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("dense matrix data has wrong size");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t k) {
  DenseMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::canonical(std::size_t k, Index i) {
  if (i < 1 || i > k) throw std::out_of_range("canonical vector index");
  DenseMatrix out(k, 1);
  out(i - 1, 0) = 1.0;
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t t = std::lcm(a.cols(), b.rows());
  return kron(a, DenseMatrix::identity(t / a.cols())) *
         kron(b, DenseMatrix::identity(t / b.rows()));
}

// ---------------------------------------------------------------------------

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), col_start_(cols + 1, 0) {}

BoolMatrix BoolMatrix::from_columns(
    std::size_t rows, std::vector<std::vector<std::uint32_t>> columns) {
  BoolMatrix out;
  out.rows_ = rows;
  out.col_start_.assign(1, 0);
  out.col_start_.reserve(columns.size() + 1);
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    if (!col.empty() && col.back() >= rows) {
      throw std::out_of_range("boolean matrix row index out of range");
    }
    out.row_index_.insert(out.row_index_.end(), col.begin(), col.end());
    out.col_start_.push_back(out.row_index_.size());
  }
  return out;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<std::uint32_t>> columns(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged boolean matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch == '1') {
        columns[c].push_back(static_cast<std::uint32_t>(r));
      } else if (ch != '0') {
        throw std::invalid_argument("boolean matrix entries must be 0 or 1");
      }
    }
  }
  return from_columns(rows.size(), std::move(columns));
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
  std::vector<std::uint32_t> all(rows);
  std::iota(all.begin(), all.end(), 0U);
  return from_columns(rows, std::vector<std::vector<std::uint32_t>>(cols, all));
}

BoolMatrix BoolMatrix::identity(std::size_t k) {
  std::vector<std::vector<std::uint32_t>> columns(k);
  for (std::size_t c = 0; c < k; ++c) {
    columns[c].push_back(static_cast<std::uint32_t>(c));
  }
  return from_columns(k, std::move(columns));
}

bool BoolMatrix::test(std::size_t r, std::size_t c) const {
  const auto col = column(c);
  return std::binary_search(col.begin(), col.end(),
                            static_cast<std::uint32_t>(r));
}

std::string BoolMatrix::row_string(std::size_t r) const {
  std::string out(cols(), '0');
  for (std::size_t c = 0; c < cols(); ++c) {
    if (test(r, c)) out[c] = '1';
  }
  return out;
}

std::vector<std::string> BoolMatrix::row_strings() const {
  std::vector<std::string> out(rows_, std::string(cols(), '0'));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::uint32_t r : column(c)) out[r][c] = '1';
  }
  return out;
}

BoolMatrix BoolMatrix::submatrix(std::span<const std::uint32_t> row_ids,
                                 std::span<const std::uint32_t> col_ids) const {
  std::vector<std::int64_t> new_row(rows_, -1);
  for (std::size_t k = 0; k < row_ids.size(); ++k) new_row[row_ids[k]] = static_cast<std::int64_t>(k);
  std::vector<std::vector<std::uint32_t>> columns(col_ids.size());
  for (std::size_t k = 0; k < col_ids.size(); ++k) {
    for (std::uint32_t r : column(col_ids[k])) {
      if (new_row[r] >= 0) {
        columns[k].push_back(static_cast<std::uint32_t>(new_row[r]));
      }
    }
  }
  return from_columns(row_ids.size(), std::move(columns));
}

DenseMatrix BoolMatrix::to_dense() const {
  DenseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::uint32_t r : column(c)) out(r, c) = 1.0;
  }
  return out;
}

BoolMatrix bool_or(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("bool_or dimension mismatch");
  }
  std::vector<std::vector<std::uint32_t>> columns(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto ca = a.column(c);
    const auto cb = b.column(c);
    std::set_union(ca.begin(), ca.end(), cb.begin(), cb.end(),
                   std::back_inserter(columns[c]));
  }
  return BoolMatrix::from_columns(a.rows(), std::move(columns));
}

// ---------------------------------------------------------------------------

LogicalMatrix::LogicalMatrix(std::size_t rows,
                             const std::vector<Index>& col_index)
    : rows_(rows) {
  targets_.reserve(col_index.size());
  for (Index i : col_index) {
    if (i < 1 || i > rows) {
      throw std::out_of_range("logical matrix entry " + std::to_string(i) +
                              " outside [1, " + std::to_string(rows) + "]");
    }
    targets_.push_back(static_cast<std::uint32_t>(i - 1));
  }
}

LogicalMatrix LogicalMatrix::from_zero_based(std::size_t rows,
                                             std::vector<std::uint32_t> targets) {
  for (std::uint32_t t : targets) {
    if (t >= rows) throw std::out_of_range("logical matrix entry out of range");
  }
  LogicalMatrix out;
  out.rows_ = rows;
  out.targets_ = std::move(targets);
  return out;
}

LogicalMatrix LogicalMatrix::identity(std::size_t k) {
  std::vector<std::uint32_t> targets(k);
  std::iota(targets.begin(), targets.end(), 0U);
  return from_zero_based(k, std::move(targets));
}

std::vector<Index> LogicalMatrix::col_index() const {
  std::vector<Index> out;
  out.reserve(targets_.size());
  for (std::uint32_t t : targets_) out.push_back(Index{t} + 1);
  return out;
}

LogicalMatrix LogicalMatrix::block(std::size_t first, std::size_t count) const {
  if (first + count > targets_.size()) {
    throw std::out_of_range("logical matrix column block out of range");
  }
  LogicalMatrix out;
  out.rows_ = rows_;
  out.targets_.assign(targets_.begin() + static_cast<std::ptrdiff_t>(first),
                      targets_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

BoolMatrix LogicalMatrix::to_bool() const {
  std::vector<std::vector<std::uint32_t>> columns(targets_.size());
  for (std::size_t c = 0; c < targets_.size(); ++c) columns[c] = {targets_[c]};
  return BoolMatrix::from_columns(rows_, std::move(columns));
}

DenseMatrix LogicalMatrix::to_dense() const {
  DenseMatrix out(rows_, targets_.size());
  for (std::size_t c = 0; c < targets_.size(); ++c) out(targets_[c], c) = 1.0;
  return out;
}

}  // namespace bcn
