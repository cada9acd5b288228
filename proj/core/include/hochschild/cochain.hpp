#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hochschild/algebra.hpp"
#include "hochschild/simplicial.hpp"
#include "hochschild/sparse_matrix.hpp"

namespace hochschild {

/**
 * Mixed-radix bijection between indices and digit tuples, rightmost digit
 * fastest. Used for bases of A^{⊗m} ⊗ B^{⊗n}: digits are (a_1..a_m, α_1..α_n).
 */
class BasisIndexer {
 public:
  explicit BasisIndexer(std::vector<std::size_t> radices);

  std::size_t size() const { return size_; }
  std::span<const std::size_t> radices() const { return radices_; }
  std::size_t encode(std::span<const std::size_t> digits) const;
  void decode(std::size_t index, std::span<std::size_t> digits) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t size_;
};

/**
 * Hom_k(A^{⊗m} ⊗ B^{⊗n}, M) for a level with |U| = 1+m, |V| = 1+m+n.
 * Coordinate of the functional e_t^* ⊗ m_k is t * dim(M) + k.
 */
class CochainSpace {
 public:
  CochainSpace(LevelSize level, const Triple& triple);

  std::size_t a_factors() const { return a_factors_; }
  std::size_t b_factors() const { return b_factors_; }
  std::size_t module_dim() const { return module_dim_; }
  const BasisIndexer& tensors() const { return tensors_; }
  std::size_t total_dim() const { return tensors_.size() * module_dim_; }
  std::size_t coordinate(std::size_t tensor, std::size_t module_index) const {
    return tensor * module_dim_ + module_index;
  }

 private:
  std::size_t a_factors_;
  std::size_t b_factors_;
  std::size_t module_dim_;
  BasisIndexer tensors_;
};

/**
 * Linear map L(f): C(target) -> C(source) induced by the pointed map
 * f = table : V_source -> V_target with f(U_source) ⊆ U_target.
 *
 * psi maps to x ↦ b_0 · psi(b_1 ⊗ ... ⊗ b_m ⊗ β_1 ⊗ ... ⊗ β_n), where b_i
 * multiplies the a's and eps(α)'s of the source slots sent to i and β_p
 * multiplies the α's sent to p; empty products are units. Rows index
 * C(source), columns C(target). Throws UsageError on an invalid table.
 */
SparseMatrix induced_map(LevelSize source, LevelSize target, std::span<const std::size_t> table,
                         const Triple& triple);

/// ∂_q = Σ_{i=0}^{q+1} (-1)^i L(d_i) : C^q -> C^{q+1}. Requires q+1 <= max_degree.
SparseMatrix pair_differential(const SimplicialPair& pair, std::size_t q, const Triple& triple);

/// Cochain-level h^* : C^q(target pair) -> C^q(source pair).
SparseMatrix pair_pullback(const PairMorphism& morphism, std::size_t q, const Triple& triple);

/**
 * First nonzero entry of ∂_{q+1} ∂_q, or nullopt when the composite vanishes.
 * ∂_{q+1} is streamed row block by row block and never materialized, so this
 * stays cheap even when C^{q+2} is large. Requires q+2 <= max_degree.
 */
std::optional<MatrixDifference> differential_square_defect(const SimplicialPair& pair, std::size_t q,
                                                           const Triple& triple);

/**
 * Textbook Hochschild coboundary Hom(A^{⊗n}, M) -> Hom(A^{⊗(n+1)}, M):
 * (δf)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_i (-1)^i f(..a_i a_{i+1}..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}.
 * Built directly from the structure constants without any simplicial data.
 */
SparseMatrix classical_differential(std::size_t n, const Algebra& A, const SymmetricBimodule& M);

/// Ordering of the off-diagonal (B) slots of a tensor matrix.
enum class BFactorOrder {
  tensor_matrix,  ///< (r,c) lexicographic, the ordering of build_disk_pair
  reversed,       ///< negative control: lexicographic order reversed
};

/**
 * Secondary differential δ^ε_{n-1}: Hom(A^{⊗(n-1)} ⊗ B^{⊗(n-1)(n-2)/2}, M) ->
 * Hom(A^{⊗n} ⊗ B^{⊗n(n-1)/2}, M), assembled from the tensor-matrix formula
 * (strip the first row and column, merge rows/columns i and i+1, strip the
 * last row and column). Shares no code with induced_map. Requires n >= 1.
 */
SparseMatrix secondary_differential_direct(std::size_t n, const Triple& triple,
                                           BFactorOrder order = BFactorOrder::tensor_matrix);

}  // namespace hochschild
