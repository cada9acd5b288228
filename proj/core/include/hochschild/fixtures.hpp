#pragma once

#include <array>
#include <string_view>

#include "hochschild/algebra.hpp"

namespace hochschild {

inline constexpr std::array<std::string_view, 4> kFixtureAlgebrasA = {"ground_field", "dual_numbers",
                                                                      "truncated_poly_3", "product_kk"};
inline constexpr std::array<std::string_view, 2> kFixtureAlgebrasB = {"ground_field", "dual_numbers"};

/**
 * Canonical eps: B -> A for the fixture choices of B.
 *
 * B = k maps 1 to 1_A. B = k[y]/(y^2) sends y to the last basis vector of A
 * when that vector squares to zero (x for the dual numbers, x^2 for
 * k[x]/(x^3)), and to 0 otherwise.
 */
AlgebraMorphism canonical_epsilon(const Algebra& B, std::string_view b_name, const Algebra& A);

/// Builds (A, B, canonical eps, M = A regular) from builtin names.
Triple fixture_triple(FieldSpec field, std::string_view a_name, std::string_view b_name);

}  // namespace hochschild
