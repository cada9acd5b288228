#pragma once

#include <cstddef>
#include <string>

namespace hochschild {

/// A cell of the pair (S^1, D^2) in degree n: the basepoint, an iterated interval
/// I(a,b) (a+b = n-1) or an iterated triangle D(a,b,c) (a+b+c = n-2).
struct DiskCellLabel {
  enum class Kind { basepoint, interval, triangle };

  static DiskCellLabel basepoint(std::size_t n) { return {Kind::basepoint, n, 0, 0, 0}; }
  static DiskCellLabel interval(std::size_t a, std::size_t b) { return {Kind::interval, a + b + 1, a, b, 0}; }
  static DiskCellLabel triangle(std::size_t a, std::size_t b, std::size_t c) {
    return {Kind::triangle, a + b + c + 2, a, b, c};
  }

  Kind kind;
  std::size_t degree;
  std::size_t a;
  std::size_t b;
  std::size_t c;

  std::string to_string() const;
  friend bool operator==(const DiskCellLabel&, const DiskCellLabel&) = default;
};

/// Entry (row, col) of the upper-triangular tensor matrix; (0,0) stands for the basepoint.
struct TensorMatrixPosition {
  std::size_t row;
  std::size_t col;

  bool is_basepoint() const { return row == 0; }
  bool is_diagonal() const { return row != 0 && row == col; }
  friend auto operator<=>(const TensorMatrixPosition&, const TensorMatrixPosition&) = default;
};

/// *_n -> (0,0), I(a,b) -> (a+1,a+1), D(a,b,c) -> (a+1,a+b+2). Throws UsageError if label.degree != n.
TensorMatrixPosition tensor_position_of(const DiskCellLabel& label, std::size_t n);

/// Inverse of tensor_position_of in degree n.
DiskCellLabel label_at_position(TensorMatrixPosition pos, std::size_t n);

/// Rank of (row, col), row < col <= n, among off-diagonal positions in (row, col) lexicographic order.
constexpr std::size_t off_diagonal_rank(std::size_t row, std::size_t col, std::size_t n) {
  return (row - 1) * n - (row - 1) * row / 2 + (col - row - 1);
}

constexpr std::size_t off_diagonal_count(std::size_t n) { return n * (n - 1) / 2; }

/**
 * Degree-n element ordering shared by the disk pair and the cochain bases:
 * basepoint at 0, the diagonal (r,r) at r, then off-diagonal positions in
 * lexicographic order starting at n+1.
 */
std::size_t disk_index_of(TensorMatrixPosition pos, std::size_t n);
TensorMatrixPosition disk_position_at(std::size_t index, std::size_t n);

}  // namespace hochschild
