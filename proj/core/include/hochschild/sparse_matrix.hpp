#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hochschild/field.hpp"

namespace hochschild {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/**
 * Exact sparse matrix in canonical triplet form: entries sorted by (row, col),
 * no duplicate coordinates, no stored zeros. A row-offset index gives CSR
 * access to each row.
 */
class SparseMatrix {
 public:
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Sums duplicates and drops zeros. Throws UsageError on out-of-range indices or foreign scalars.
  static SparseMatrix from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                    std::vector<MatrixEntry> entries);
  /// Trusts that `entries` is already canonical.
  static SparseMatrix from_canonical(FieldSpec field, std::size_t rows, std::size_t cols,
                                     std::vector<MatrixEntry> entries);
  static SparseMatrix identity(FieldSpec field, std::size_t n);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::span<const MatrixEntry> entries() const { return entries_; }
  std::span<const MatrixEntry> row(std::size_t r) const;
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Scalar& factor) const;

  friend SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend SparseMatrix operator+(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend SparseMatrix operator-(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend bool operator==(const SparseMatrix& lhs, const SparseMatrix& rhs);

 private:
  void build_row_index();

  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MatrixEntry> entries_;
  std::vector<std::size_t> row_offsets_;
};

struct MatrixDifference {
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
};

/// First coordinate (row-major) where two equally shaped matrices differ.
std::optional<MatrixDifference> first_difference(const SparseMatrix& lhs, const SparseMatrix& rhs);

/**
 * Accumulates one sparse row (or a small block of rows) as unsorted
 * (col, value) contributions and emits it in canonical form.
 */
class RowAccumulator {
 public:
  void add(std::size_t col, Scalar value) { terms_.push_back({col, std::move(value)}); }
  void clear() { terms_.clear(); }
  bool empty() const { return terms_.empty(); }

  /// Sorted, merged, zero-free terms; the accumulator is left empty.
  std::vector<std::pair<std::size_t, Scalar>> take_canonical();

 private:
  std::vector<std::pair<std::size_t, Scalar>> terms_;
};

}  // namespace hochschild
