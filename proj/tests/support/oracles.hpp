#pragma once

// Independent reference computations used only by the test suites.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hochschild/simplicial.hpp"
#include "hochschild/sparse_matrix.hpp"

namespace hochschild::testing {

bool trial_division_is_prime(std::uint64_t n);

/// Dense Gaussian elimination: uint64 residues over F_p, mpq_class fractions over Q.
std::size_t dense_rank(const SparseMatrix& matrix);

/**
 * (S^1, D^2) rebuilt from nondecreasing vertex sequences over {0,1,2}: a cell
 * is 0^{a+1}2^{b+1} or 0^{a+1}1^{b+1}2^{c+1}, d_i deletes the i-th vertex and
 * any sequence missing 0 or 2 collapses to the basepoint. Elements are
 * ordered like build_disk_pair (basepoint, diagonal, off-diagonal).
 */
SimplicialPair vertex_sequence_disk_pair(std::size_t max_degree);

/**
 * dim HH^q(k[x]/(x^m), k[x]/(x^m)) for q = 0..q_max from the 2-periodic
 * resolution: after Hom into A the complex is A -0-> A -(m x^{m-1})-> A -0-> ...
 * Ranks come from dense elimination of those multiplication matrices.
 */
std::vector<std::size_t> truncated_poly_hochschild_dims(FieldSpec field, std::size_t m, std::size_t q_max);

}  // namespace hochschild::testing
