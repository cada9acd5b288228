#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hochschild/algebra.hpp"
#include "hochschild/simplicial.hpp"
#include "hochschild/sparse_matrix.hpp"

namespace hochschild {

/**
 * Exact rank. Over F_p: sparse Gaussian elimination choosing the sparsest
 * column and then its shortest row as pivot (Markowitz-style). Over Q:
 * the same pivoting on integer rows with fraction-free updates
 * p·row - a·pivot_row, each row kept primitive.
 */
std::size_t rank(const SparseMatrix& matrix);

struct DegreeCohomology {
  std::size_t degree;
  std::size_t cochain_dim;
  std::size_t rank_out;  ///< rank ∂_q
  std::size_t rank_in;   ///< rank ∂_{q-1}, 0 in degree 0
  std::size_t cohomology_dim;
};

struct CohomologyReport {
  std::vector<DegreeCohomology> degrees;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.cohomology_dim);
    return out;
  }
};

/**
 * Cohomology of C^0 -> C^1 -> ... from differentials[q] = ∂_q, reported in
 * degrees 0..differentials.size()-1. Throws UsageError on shape mismatch and
 * ConsistencyError if some ∂_{q+1} ∂_q is nonzero.
 */
CohomologyReport cohomology_from_differentials(std::span<const SparseMatrix> differentials);

/// H^q_{(X,Y)}((A,B,eps); M) for 0 <= q <= q_max. Requires q_max + 1 <= pair.max_degree().
CohomologyReport cohomology_dims(const SimplicialPair& pair, const Triple& triple, std::size_t q_max);

}  // namespace hochschild
