#include "hochschild/fixtures.hpp"

#include "hochschild/errors.hpp"

namespace hochschild {

AlgebraMorphism canonical_epsilon(const Algebra& B, std::string_view b_name, const Algebra& A) {
  if (b_name == "ground_field") return AlgebraMorphism::unit_map(B, A);
  if (b_name != "dual_numbers") throw UsageError("no canonical eps for B = '" + std::string(b_name) + "'");

  const FieldSpec field = A.field();
  const std::size_t top = A.dim() - 1;
  bool square_zero = top > 0 && multiply(A.basis(top), A.basis(top)).is_zero();

  std::vector<Scalar> matrix(A.dim() * B.dim(), Scalar::zero(field));
  for (std::size_t r = 0; r < A.dim(); ++r) matrix[r * B.dim() + 0] = A.unit_coords()[r];
  if (square_zero) matrix[top * B.dim() + 1] = Scalar::one(field);
  return AlgebraMorphism(B, A, std::move(matrix));
}

Triple fixture_triple(FieldSpec field, std::string_view a_name, std::string_view b_name) {
  Algebra A = builtin_algebra(field, a_name);
  Algebra B = builtin_algebra(field, b_name);
  AlgebraMorphism eps = canonical_epsilon(B, b_name, A);
  return Triple{A, B, std::move(eps), SymmetricBimodule::regular(A)};
}

}  // namespace hochschild
