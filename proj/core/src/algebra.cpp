#include "hochschild/algebra.hpp"

#include <charconv>

#include "hochschild/errors.hpp"

namespace hochschild {
namespace {

void require_field(std::span<const Scalar> values, FieldSpec field, const char* what) {
  for (const auto& v : values) {
    if (v.field() != field) throw UsageError(std::string(what) + " has entries outside F=" + field.to_string());
  }
}

std::vector<Scalar> multiply_coords(const Algebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t d = algebra.dim();
  std::vector<Scalar> out(d, Scalar::zero(algebra.field()));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = algebra.constant(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

}  // namespace

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
                 std::vector<Scalar> unit) {
  const std::size_t d = basis_labels.size();
  if (d == 0) throw UsageError("algebra dimension must be positive");
  if (constants.size() != d * d * d) {
    throw UsageError("structure constants must have dim^3 = " + std::to_string(d * d * d) + " entries");
  }
  if (unit.size() != d) throw UsageError("unit vector must have dim entries");
  require_field(constants, field, "structure constants");
  require_field(unit, field, "unit vector");
  data_ = std::make_shared<const Data>(Data{field, std::move(basis_labels), std::move(constants), std::move(unit)});
}

AlgebraElement Algebra::zero() const {
  return AlgebraElement(*this, std::vector<Scalar>(dim(), Scalar::zero(field())));
}

AlgebraElement Algebra::unit() const {
  return AlgebraElement(*this, data_->unit);
}

AlgebraElement Algebra::basis(std::size_t i) const {
  if (i >= dim()) throw UsageError("basis index out of range");
  std::vector<Scalar> coords(dim(), Scalar::zero(field()));
  coords[i] = Scalar::one(field());
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement Algebra::element(std::vector<Scalar> coords) const {
  return AlgebraElement(*this, std::move(coords));
}

bool Algebra::same_as(const Algebra& other) const {
  if (data_ == other.data_) return true;
  return data_->field == other.data_->field && data_->labels == other.data_->labels &&
         data_->constants == other.data_->constants && data_->unit == other.data_->unit;
}

AlgebraElement::AlgebraElement(Algebra algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) throw UsageError("element length does not match algebra dimension");
  require_field(coords_, algebra_.field(), "algebra element");
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!x.algebra().same_as(y.algebra())) throw UsageError("multiply: operands belong to different algebras");
  return AlgebraElement(x.algebra(), multiply_coords(x.algebra(), x.coords(), y.coords()));
}

AlgebraElement product_of_family(const Algebra& algebra, std::span<const AlgebraElement> factors) {
  AlgebraElement acc = algebra.unit();
  for (const auto& f : factors) {
    if (!f.algebra().same_as(algebra)) throw UsageError("product_of_family: factor from a different algebra");
    acc = multiply(acc, f);
  }
  return acc;
}

ValidationReport validate_algebra(const Algebra& algebra) {
  ValidationReport report;
  const std::size_t d = algebra.dim();
  const FieldSpec field = algebra.field();

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!(algebra.constant(i, j, k) == algebra.constant(j, i, k))) {
          report.add("commutativity", {i, j}, "c[i][j][" + std::to_string(k) + "] != c[j][i][k]");
          break;
        }
      }
    }
  }

  // (e_i e_j) e_l == e_i (e_j e_l), compared coordinate-wise.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t k = 0; k < d; ++k) {
          Scalar lhs = Scalar::zero(field);
          Scalar rhs = Scalar::zero(field);
          for (std::size_t m = 0; m < d; ++m) {
            lhs += algebra.constant(i, j, m) * algebra.constant(m, l, k);
            rhs += algebra.constant(j, l, m) * algebra.constant(i, m, k);
          }
          if (!(lhs == rhs)) {
            report.add("associativity", {i, j, l, k});
            break;
          }
        }
      }
    }
  }

  for (std::size_t j = 0; j < d; ++j) {
    auto product = multiply_coords(algebra, algebra.unit_coords(), algebra.basis(j).coords());
    if (!(AlgebraElement(algebra, product) == algebra.basis(j))) report.add("unitality", {j});
  }
  return report;
}

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, std::vector<Scalar> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.field() != target_.field()) throw UsageError("morphism between algebras over different fields");
  if (matrix_.size() != source_.dim() * target_.dim()) {
    throw UsageError("morphism matrix must be dim(A) x dim(B)");
  }
  require_field(matrix_, target_.field(), "morphism matrix");
}

AlgebraElement AlgebraMorphism::image_of_basis(std::size_t j) const {
  std::vector<Scalar> coords;
  coords.reserve(target_.dim());
  for (std::size_t r = 0; r < target_.dim(); ++r) coords.push_back(entry(r, j));
  return target_.element(std::move(coords));
}

AlgebraElement AlgebraMorphism::apply(const AlgebraElement& b) const {
  if (!b.algebra().same_as(source_)) throw UsageError("morphism applied to an element outside its source");
  std::vector<Scalar> coords(target_.dim(), Scalar::zero(target_.field()));
  for (std::size_t r = 0; r < target_.dim(); ++r) {
    for (std::size_t j = 0; j < source_.dim(); ++j) coords[r] += entry(r, j) * b[j];
  }
  return target_.element(std::move(coords));
}

AlgebraMorphism AlgebraMorphism::unit_map(const Algebra& ground, const Algebra& target) {
  if (ground.dim() != 1) throw UsageError("unit_map requires a one-dimensional source");
  // The single basis vector of k is its unit; scale so that 1_k maps to 1_A.
  Scalar scale = ground.unit_coords()[0].inverse();
  std::vector<Scalar> matrix;
  for (const auto& u : target.unit_coords()) matrix.push_back(u * scale);
  return AlgebraMorphism(ground, target, std::move(matrix));
}

ValidationReport validate_morphism(const AlgebraMorphism& morphism) {
  ValidationReport report;
  const Algebra& B = morphism.source();
  const Algebra& A = morphism.target();
  if (!(morphism.apply(B.unit()) == A.unit())) report.add("unit_preservation", {});
  for (std::size_t i = 0; i < B.dim(); ++i) {
    for (std::size_t j = i; j < B.dim(); ++j) {
      auto lhs = morphism.apply(multiply(B.basis(i), B.basis(j)));
      auto rhs = multiply(morphism.image_of_basis(i), morphism.image_of_basis(j));
      if (!(lhs == rhs)) report.add("multiplicativity", {i, j});
    }
  }
  return report;
}

SymmetricBimodule::SymmetricBimodule(Algebra algebra, std::vector<std::string> basis_labels,
                                     std::vector<Scalar> action)
    : algebra_(std::move(algebra)), labels_(std::move(basis_labels)), action_(std::move(action)) {
  if (labels_.empty()) throw UsageError("module dimension must be positive");
  if (action_.size() != algebra_.dim() * dim() * dim()) {
    throw UsageError("action tensor must have dim(A) * dim(M)^2 entries");
  }
  require_field(action_, algebra_.field(), "action tensor");
}

SymmetricBimodule SymmetricBimodule::regular(const Algebra& algebra) {
  const std::size_t d = algebra.dim();
  std::vector<std::string> labels;
  std::vector<Scalar> action;
  action.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i) labels.push_back(algebra.label(i));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) action.push_back(algebra.constant(i, j, k));
    }
  }
  return SymmetricBimodule(algebra, std::move(labels), std::move(action));
}

ModuleElement act(const SymmetricBimodule& module, const AlgebraElement& a, const ModuleElement& m) {
  if (!a.algebra().same_as(module.algebra())) throw UsageError("act: element is not in the module's algebra");
  if (m.coords.size() != module.dim()) throw UsageError("act: module element has wrong dimension");
  const FieldSpec field = module.algebra().field();
  ModuleElement out{std::vector<Scalar>(module.dim(), Scalar::zero(field))};
  for (std::size_t i = 0; i < module.algebra().dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < module.dim(); ++j) {
      if (m.coords[j].is_zero()) continue;
      Scalar coef = a[i] * m.coords[j];
      for (std::size_t k = 0; k < module.dim(); ++k) {
        const Scalar& c = module.action(i, j, k);
        if (!c.is_zero()) out.coords[k] += coef * c;
      }
    }
  }
  return out;
}

ValidationReport validate_module(const SymmetricBimodule& module) {
  ValidationReport report;
  const Algebra& A = module.algebra();
  const FieldSpec field = A.field();
  auto module_basis = [&](std::size_t j) {
    ModuleElement m{std::vector<Scalar>(module.dim(), Scalar::zero(field))};
    m.coords[j] = Scalar::one(field);
    return m;
  };
  for (std::size_t j = 0; j < module.dim(); ++j) {
    if (!(act(module, A.unit(), module_basis(j)) == module_basis(j))) report.add("unit_action", {j});
  }
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t l = 0; l < A.dim(); ++l) {
      for (std::size_t j = 0; j < module.dim(); ++j) {
        auto lhs = act(module, multiply(A.basis(i), A.basis(l)), module_basis(j));
        auto rhs = act(module, A.basis(i), act(module, A.basis(l), module_basis(j)));
        if (!(lhs == rhs)) report.add("action_associativity", {i, l, j});
      }
    }
  }
  return report;
}

ValidationReport validate_triple(const Triple& triple) {
  ValidationReport report;
  if (triple.B.field() != triple.A.field()) report.add("triple.field_mismatch", {});
  if (!triple.epsilon.source().same_as(triple.B) || !triple.epsilon.target().same_as(triple.A)) {
    report.add("triple.epsilon_endpoints", {});
  }
  if (!triple.M.algebra().same_as(triple.A)) report.add("triple.module_algebra", {});
  if (!report.ok()) return report;
  report.append(validate_algebra(triple.A), "A.");
  report.append(validate_algebra(triple.B), "B.");
  report.append(validate_morphism(triple.epsilon), "epsilon.");
  report.append(validate_module(triple.M), "M.");
  return report;
}

Algebra builtin_algebra(FieldSpec field, BuiltinAlgebra name, std::size_t m) {
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  switch (name) {
    case BuiltinAlgebra::ground_field:
      return Algebra(field, {"1"}, {one}, {one});
    case BuiltinAlgebra::dual_numbers:
      return builtin_algebra(field, BuiltinAlgebra::truncated_poly, 2);
    case BuiltinAlgebra::truncated_poly: {
      if (m < 2) throw UsageError("truncated_poly requires m >= 2");
      std::vector<std::string> labels{"1", "x"};
      for (std::size_t p = 2; p < m; ++p) labels.push_back("x^" + std::to_string(p));
      std::vector<Scalar> c(m * m * m, zero);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (i + j < m) c[(i * m + j) * m + i + j] = one;
        }
      }
      std::vector<Scalar> unit(m, zero);
      unit[0] = one;
      return Algebra(field, std::move(labels), std::move(c), std::move(unit));
    }
    case BuiltinAlgebra::product_kk: {
      // Basis 1 = (1,1), e = (1,0).
      std::vector<Scalar> c(8, zero);
      c[(0 * 2 + 0) * 2 + 0] = one;
      c[(0 * 2 + 1) * 2 + 1] = one;
      c[(1 * 2 + 0) * 2 + 1] = one;
      c[(1 * 2 + 1) * 2 + 1] = one;
      return Algebra(field, {"1", "e"}, std::move(c), {one, zero});
    }
  }
  throw UsageError("unknown builtin algebra");
}

Algebra builtin_algebra(FieldSpec field, std::string_view name) {
  if (name == "ground_field") return builtin_algebra(field, BuiltinAlgebra::ground_field);
  if (name == "dual_numbers") return builtin_algebra(field, BuiltinAlgebra::dual_numbers);
  if (name == "product_kk") return builtin_algebra(field, BuiltinAlgebra::product_kk);
  constexpr std::string_view prefix = "truncated_poly_";
  if (name.starts_with(prefix)) {
    std::size_t m = 0;
    auto digits = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return builtin_algebra(field, BuiltinAlgebra::truncated_poly, m);
    }
  }
  throw UsageError("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace hochschild
