#include "hochschild/tensor_matrix.hpp"

#include "hochschild/errors.hpp"

namespace hochschild {

std::string DiskCellLabel::to_string() const {
  switch (kind) {
    case Kind::basepoint:
      return "*_" + std::to_string(degree);
    case Kind::interval:
      return "I(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::triangle:
      return "D(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  return "?";
}

TensorMatrixPosition tensor_position_of(const DiskCellLabel& label, std::size_t n) {
  if (label.degree != n) {
    throw UsageError("cell " + label.to_string() + " has degree " + std::to_string(label.degree) + ", not " +
                     std::to_string(n));
  }
  switch (label.kind) {
    case DiskCellLabel::Kind::basepoint:
      return {0, 0};
    case DiskCellLabel::Kind::interval:
      return {label.a + 1, label.a + 1};
    case DiskCellLabel::Kind::triangle:
      return {label.a + 1, label.a + label.b + 2};
  }
  throw UsageError("bad cell kind");
}

DiskCellLabel label_at_position(TensorMatrixPosition pos, std::size_t n) {
  if (pos.is_basepoint()) return DiskCellLabel::basepoint(n);
  if (pos.row > pos.col || pos.col > n) throw UsageError("position outside the degree-n tensor matrix");
  if (pos.is_diagonal()) return DiskCellLabel::interval(pos.row - 1, n - pos.row);
  return DiskCellLabel::triangle(pos.row - 1, pos.col - pos.row - 1, n - pos.col);
}

std::size_t disk_index_of(TensorMatrixPosition pos, std::size_t n) {
  if (pos.is_basepoint()) return 0;
  if (pos.row > pos.col || pos.col > n) throw UsageError("position outside the degree-n tensor matrix");
  if (pos.is_diagonal()) return pos.row;
  return n + 1 + off_diagonal_rank(pos.row, pos.col, n);
}

TensorMatrixPosition disk_position_at(std::size_t index, std::size_t n) {
  if (index == 0) return {0, 0};
  if (index <= n) return {index, index};
  std::size_t rank = index - n - 1;
  if (rank >= off_diagonal_count(n)) throw UsageError("disk index out of range");
  for (std::size_t row = 1; row < n; ++row) {
    std::size_t in_row = n - row;
    if (rank < in_row) return {row, row + 1 + rank};
    rank -= in_row;
  }
  throw UsageError("disk index out of range");
}

}  // namespace hochschild
