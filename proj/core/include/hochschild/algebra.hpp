#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hochschild/field.hpp"
#include "hochschild/validation.hpp"

namespace hochschild {

class AlgebraElement;

/**
 * A finite-dimensional commutative unital algebra presented by structure
 * constants: e_i * e_j = sum_k c[i][j][k] e_k.
 *
 * Algebra is an immutable handle; copies share the same constants. The
 * constructor only checks shapes and fields, the ring axioms are checked by
 * validate_algebra so that a config file can report every problem at once.
 */
class Algebra {
 public:
  /// `constants` is row-major [i][j][k] of length dim^3; `unit` has length dim.
  Algebra(FieldSpec field, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
          std::vector<Scalar> unit);

  FieldSpec field() const { return data_->field; }
  std::size_t dim() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->constants[(i * dim() + j) * dim() + k];
  }
  std::span<const Scalar> unit_coords() const { return data_->unit; }

  AlgebraElement zero() const;
  AlgebraElement unit() const;
  AlgebraElement basis(std::size_t i) const;
  AlgebraElement element(std::vector<Scalar> coords) const;

  /// Identity of the underlying constants (shared handle or equal data).
  bool same_as(const Algebra& other) const;

 private:
  struct Data {
    FieldSpec field;
    std::vector<std::string> labels;
    std::vector<Scalar> constants;
    std::vector<Scalar> unit;
  };
  std::shared_ptr<const Data> data_;
};

class AlgebraElement {
 public:
  AlgebraElement(Algebra algebra, std::vector<Scalar> coords);

  const Algebra& algebra() const { return algebra_; }
  std::span<const Scalar> coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  Algebra algebra_;
  std::vector<Scalar> coords_;
};

/// Bilinear product; throws UsageError if the operands live in different algebras.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// Left-fold product. The empty family is the unit.
AlgebraElement product_of_family(const Algebra& algebra, std::span<const AlgebraElement> factors);

/// Checks commutativity, associativity and unitality; witnesses are basis indices.
ValidationReport validate_algebra(const Algebra& algebra);

/// A k-algebra map eps: B -> A, stored as the d_A x d_B matrix whose column j is eps(e_j).
class AlgebraMorphism {
 public:
  /// `matrix` is row-major: matrix[r * dim(B) + j] is coordinate r of eps(e_j).
  AlgebraMorphism(Algebra source, Algebra target, std::vector<Scalar> matrix);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Scalar& entry(std::size_t row, std::size_t col) const { return matrix_[row * source_.dim() + col]; }
  AlgebraElement image_of_basis(std::size_t j) const;
  AlgebraElement apply(const AlgebraElement& b) const;

  /// The structure map k -> A (B must be one-dimensional).
  static AlgebraMorphism unit_map(const Algebra& ground, const Algebra& target);

 private:
  Algebra source_;
  Algebra target_;
  std::vector<Scalar> matrix_;
};

/// Unitality eps(1) = 1 and multiplicativity on basis pairs.
ValidationReport validate_morphism(const AlgebraMorphism& morphism);

/**
 * A symmetric A-bimodule. Only the left action e_i * m_j = sum_k act[i][j][k] m_k
 * is stored and the right action is defined to equal it, so symmetry (and
 * B-symmetry through eps) hold structurally.
 */
class SymmetricBimodule {
 public:
  SymmetricBimodule(Algebra algebra, std::vector<std::string> basis_labels, std::vector<Scalar> action);

  /// M = A acting on itself by multiplication.
  static SymmetricBimodule regular(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Scalar& action(std::size_t i, std::size_t j, std::size_t k) const {
    return action_[(i * dim() + j) * dim() + k];
  }

 private:
  Algebra algebra_;
  std::vector<std::string> labels_;
  std::vector<Scalar> action_;
};

struct ModuleElement {
  std::vector<Scalar> coords;
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// a . m through the stored action; throws UsageError on dimension mismatch.
ModuleElement act(const SymmetricBimodule& module, const AlgebraElement& a, const ModuleElement& m);

/// Unit acts as identity and (e_i e_j) m = e_i (e_j m) on basis triples.
ValidationReport validate_module(const SymmetricBimodule& module);

/// The data (A, B, eps, M) a cochain complex is built from.
struct Triple {
  Algebra A;
  Algebra B;
  AlgebraMorphism epsilon;
  SymmetricBimodule M;

  FieldSpec field() const { return A.field(); }
};

/// Cross-object consistency (shared field, eps: B -> A, M over A) plus every component validator.
ValidationReport validate_triple(const Triple& triple);

enum class BuiltinAlgebra { ground_field, dual_numbers, truncated_poly, product_kk };

/// ground_field: k. dual_numbers: k[x]/(x^2). truncated_poly(m): k[x]/(x^m), m >= 2.
/// product_kk: k x k with basis (1, e), e^2 = e. Basis is (1, x, x^2, ...).
Algebra builtin_algebra(FieldSpec field, BuiltinAlgebra name, std::size_t m = 0);

/// Accepts "ground_field", "dual_numbers", "product_kk", "truncated_poly_<m>".
Algebra builtin_algebra(FieldSpec field, std::string_view name);

}  // namespace hochschild
