#include "hochschild/sparse_matrix.hpp"

#include <algorithm>

#include "hochschild/errors.hpp"

namespace hochschild {
namespace {

bool coord_less(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

void require_same_shape(const SparseMatrix& a, const SparseMatrix& b, const char* op) {
  if (a.field() != b.field()) throw UsageError(std::string(op) + ": matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError(std::string(op) + ": shape mismatch");
}

}  // namespace

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), row_offsets_(rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                         std::vector<MatrixEntry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw UsageError("matrix entry index out of range");
    if (e.value.field() != field) throw UsageError("matrix entry over a different field");
  }
  std::stable_sort(entries.begin(), entries.end(), coord_less);
  std::vector<MatrixEntry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
      merged.push_back(std::move(e));
    }
  }
  if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
  return from_canonical(field, rows, cols, std::move(merged));
}

SparseMatrix SparseMatrix::from_canonical(FieldSpec field, std::size_t rows, std::size_t cols,
                                          std::vector<MatrixEntry> entries) {
  SparseMatrix m(field, rows, cols);
  m.entries_ = std::move(entries);
  m.build_row_index();
  return m;
}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  std::vector<MatrixEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, Scalar::one(field)});
  return from_canonical(field, n, n, std::move(entries));
}

void SparseMatrix::build_row_index() {
  row_offsets_.assign(rows_ + 1, 0);
  for (const auto& e : entries_) ++row_offsets_[e.row + 1];
  for (std::size_t r = 0; r < rows_; ++r) row_offsets_[r + 1] += row_offsets_[r];
}

std::span<const MatrixEntry> SparseMatrix::row(std::size_t r) const {
  if (r >= rows_) throw UsageError("row index out of range");
  return std::span<const MatrixEntry>(entries_).subspan(row_offsets_[r], row_offsets_[r + 1] - row_offsets_[r]);
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto entries = row(r);
  auto it = std::lower_bound(entries.begin(), entries.end(), c,
                             [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  if (it != entries.end() && it->col == c) return it->value;
  return Scalar::zero(field_);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  std::stable_sort(t.begin(), t.end(), coord_less);
  return from_canonical(field_, cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(const Scalar& factor) const {
  if (factor.is_zero()) return SparseMatrix(field_, rows_, cols_);
  std::vector<MatrixEntry> out(entries_);
  for (auto& e : out) e.value *= factor;
  return from_canonical(field_, rows_, cols_, std::move(out));
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.field_ != rhs.field_) throw UsageError("product of matrices over different fields");
  if (lhs.cols_ != rhs.rows_) throw UsageError("product shape mismatch");
  const FieldSpec field = lhs.field_;
  std::vector<MatrixEntry> out;
  // Sparse accumulator over one output row.
  std::vector<Scalar> dense(rhs.cols_, Scalar::zero(field));
  std::vector<char> touched(rhs.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (const auto& a : lhs.row(r)) {
      for (const auto& b : rhs.row(a.col)) {
        if (!touched[b.col]) {
          touched[b.col] = 1;
          cols.push_back(b.col);
        }
        dense[b.col] += a.value * b.value;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t c : cols) {
      if (!dense[c].is_zero()) out.push_back({r, c, dense[c]});
      dense[c] = Scalar::zero(field);
      touched[c] = 0;
    }
    cols.clear();
  }
  return SparseMatrix::from_canonical(field, lhs.rows_, rhs.cols_, std::move(out));
}

SparseMatrix operator+(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  require_same_shape(lhs, rhs, "sum");
  std::vector<MatrixEntry> all(lhs.entries_);
  all.insert(all.end(), rhs.entries_.begin(), rhs.entries_.end());
  return SparseMatrix::from_triplets(lhs.field_, lhs.rows_, lhs.cols_, std::move(all));
}

SparseMatrix operator-(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  return lhs + rhs.scaled(-Scalar::one(rhs.field()));
}

bool operator==(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.field_ != rhs.field_ || lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  if (lhs.entries_.size() != rhs.entries_.size()) return false;
  for (std::size_t k = 0; k < lhs.entries_.size(); ++k) {
    const auto& a = lhs.entries_[k];
    const auto& b = rhs.entries_[k];
    if (a.row != b.row || a.col != b.col || !(a.value == b.value)) return false;
  }
  return true;
}

std::optional<MatrixDifference> first_difference(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  require_same_shape(lhs, rhs, "first_difference");
  const Scalar zero = Scalar::zero(lhs.field());
  auto a = lhs.entries();
  auto b = rhs.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    bool take_a = j == b.size() || (i < a.size() && coord_less(a[i], b[j]));
    bool take_b = i == a.size() || (j < b.size() && coord_less(b[j], a[i]));
    if (take_a) return MatrixDifference{a[i].row, a[i].col, a[i].value, zero};
    if (take_b) return MatrixDifference{b[j].row, b[j].col, zero, b[j].value};
    if (!(a[i].value == b[j].value)) return MatrixDifference{a[i].row, a[i].col, a[i].value, b[j].value};
    ++i;
    ++j;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, Scalar>> RowAccumulator::take_canonical() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Scalar>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_.clear();
  return out;
}

}  // namespace hochschild
