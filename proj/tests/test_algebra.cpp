#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hochschild/algebra.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/fixtures.hpp"

namespace hochschild {
namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF101 = FieldSpec::prime(101);

TEST(Algebra, MultiplyExamples) {
  Algebra dual = builtin_algebra(kQ, "dual_numbers");
  EXPECT_TRUE(multiply(dual.basis(1), dual.basis(1)).is_zero());
  Algebra t3 = builtin_algebra(kQ, "truncated_poly_3");
  EXPECT_EQ(multiply(t3.basis(1), t3.basis(1)), t3.basis(2));
  EXPECT_TRUE(multiply(t3.basis(1), t3.basis(2)).is_zero());
  auto y = t3.element({Scalar::parse(kQ, "2"), Scalar::parse(kQ, "-1/3"), Scalar::parse(kQ, "5")});
  EXPECT_EQ(multiply(t3.unit(), y), y);
  EXPECT_THROW(multiply(dual.basis(1), t3.basis(1)), UsageError);
}

TEST(Algebra, ProductOfFamily) {
  Algebra A = builtin_algebra(kQ, "dual_numbers");
  EXPECT_EQ(product_of_family(A, {}), A.unit());
  std::vector<AlgebraElement> single{A.basis(1)};
  EXPECT_EQ(product_of_family(A, single), A.basis(1));
  std::vector<AlgebraElement> twice{A.basis(1), A.basis(1)};
  EXPECT_TRUE(product_of_family(A, twice).is_zero());
  Algebra other = builtin_algebra(kQ, "product_kk");
  std::vector<AlgebraElement> mixed{other.basis(1)};
  EXPECT_THROW(product_of_family(A, mixed), UsageError);
}

TEST(Module, ActExamples) {
  Algebra A = builtin_algebra(kF101, "dual_numbers");
  SymmetricBimodule M = SymmetricBimodule::regular(A);
  ModuleElement m{{Scalar::from_int(kF101, 3), Scalar::from_int(kF101, 7)}};
  EXPECT_EQ(act(M, A.unit(), m), m);
  ModuleElement x{{Scalar::zero(kF101), Scalar::one(kF101)}};
  ModuleElement zero{{Scalar::zero(kF101), Scalar::zero(kF101)}};
  EXPECT_EQ(act(M, A.basis(1), x), zero);
  EXPECT_EQ(act(M, A.zero(), m), zero);
  EXPECT_THROW(act(M, A.unit(), ModuleElement{{Scalar::zero(kF101)}}), UsageError);
}

TEST(Validation, BuiltinsAreValid) {
  for (FieldSpec field : {kQ, kF101}) {
    for (auto name : {"ground_field", "dual_numbers", "truncated_poly_3", "truncated_poly_5", "product_kk"}) {
      Algebra A = builtin_algebra(field, name);
      EXPECT_TRUE(validate_algebra(A).ok()) << name;
      EXPECT_TRUE(validate_module(SymmetricBimodule::regular(A)).ok()) << name;
    }
  }
  EXPECT_EQ(builtin_algebra(kQ, "ground_field").dim(), 1u);
  EXPECT_TRUE(builtin_algebra(kQ, "ground_field").constant(0, 0, 0).is_one());
  EXPECT_EQ(builtin_algebra(kQ, "dual_numbers").dim(), 2u);
  EXPECT_EQ(builtin_algebra(kQ, "truncated_poly_3").dim(), 3u);
  EXPECT_THROW(builtin_algebra(kQ, "truncated_poly_1"), UsageError);
  EXPECT_THROW(builtin_algebra(kQ, "octonions"), UsageError);
}

TEST(Validation, CommutativityCounterexample) {
  const Scalar z = Scalar::zero(kQ), o = Scalar::one(kQ);
  // dual numbers with x*1 broken: c[1][0][*] = 0 while c[0][1][1] = 1
  std::vector<Scalar> c{o, z, z, o, z, z, z, z};
  Algebra broken(kQ, {"1", "x"}, c, {o, z});
  auto report = validate_algebra(broken);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations().front().axiom, "commutativity");
  EXPECT_EQ(report.violations().front().witness, (std::vector<std::size_t>{0, 1}));
}

TEST(Validation, AssociativityAndUnitCounterexamples) {
  const Scalar z = Scalar::zero(kQ), o = Scalar::one(kQ);
  // 1*1 = 0, 1*x = x*1 = x, x*x = 1 + x
  std::vector<Scalar> c{z, z, z, o, z, o, o, o};
  Algebra broken(kQ, {"1", "x"}, c, {o, z});
  auto report = validate_algebra(broken);
  EXPECT_TRUE(report.contains("associativity"));
  EXPECT_TRUE(report.contains("unitality"));
  EXPECT_FALSE(report.contains("commutativity"));
}

TEST(Validation, ShapeErrorsThrow) {
  const Scalar o = Scalar::one(kQ);
  EXPECT_THROW(Algebra(kQ, {}, {}, {}), UsageError);
  EXPECT_THROW(Algebra(kQ, {"1"}, {o, o}, {o}), UsageError);
  EXPECT_THROW(Algebra(kQ, {"1"}, {Scalar::one(kF101)}, {o}), UsageError);
}

TEST(Morphism, FixtureEpsilonsAreAlgebraMaps) {
  for (FieldSpec field : {kQ, kF101}) {
    for (auto a : kFixtureAlgebrasA) {
      for (auto b : kFixtureAlgebrasB) {
        Triple t = fixture_triple(field, a, b);
        auto report = validate_triple(t);
        EXPECT_TRUE(report.ok()) << a << "/" << b;
      }
    }
  }
  // y -> x in the dual numbers is the identity; y -> x^2 in k[x]/(x^3).
  Triple t = fixture_triple(kQ, "truncated_poly_3", "dual_numbers");
  EXPECT_EQ(t.epsilon.image_of_basis(1), t.A.basis(2));
}

TEST(Morphism, NonMultiplicativeMapIsReported) {
  Algebra B = builtin_algebra(kQ, "dual_numbers");
  Algebra A = builtin_algebra(kQ, "truncated_poly_3");
  const Scalar z = Scalar::zero(kQ), o = Scalar::one(kQ);
  // y -> x is not multiplicative: y^2 = 0 but x^2 != 0
  AlgebraMorphism eps(B, A, {o, z, z, o, z, z});
  auto report = validate_morphism(eps);
  EXPECT_TRUE(report.contains("multiplicativity"));
  AlgebraMorphism no_unit(B, A, {z, z, z, z, z, z});
  EXPECT_TRUE(validate_morphism(no_unit).contains("unit_preservation"));
}

// Change of basis e'_i = s_i e_{perm(i)} applied to a builtin.
Algebra rebase(const Algebra& A, const std::vector<std::size_t>& perm, const std::vector<Scalar>& s) {
  const std::size_t d = A.dim();
  std::vector<std::size_t> inv(d);
  for (std::size_t i = 0; i < d; ++i) inv[perm[i]] = i;
  std::vector<Scalar> c(d * d * d, Scalar::zero(A.field()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::size_t kk = inv[k];
        c[(i * d + j) * d + kk] = s[i] * s[j] * A.constant(perm[i], perm[j], k) / s[kk];
      }
    }
  }
  std::vector<Scalar> unit(d, Scalar::zero(A.field()));
  for (std::size_t k = 0; k < d; ++k) unit[inv[k]] = A.unit_coords()[k] / s[inv[k]];
  std::vector<std::string> labels(d, "b");
  return Algebra(A.field(), labels, c, unit);
}

TEST(AlgebraProperty, RandomRebasedAlgebrasAreCommutativeAndAssociative) {
  std::mt19937_64 rng(7);
  auto rnd = [&](bool nonzero) {
    std::int64_t v = static_cast<std::int64_t>(rng() % 101);
    if (nonzero && v == 0) v = 1;
    return Scalar::from_int(kF101, v);
  };
  for (auto name : {"ground_field", "dual_numbers", "truncated_poly_3", "product_kk"}) {
    Algebra base = builtin_algebra(kF101, name);
    for (int round = 0; round < 5; ++round) {
      std::vector<std::size_t> perm(base.dim());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Scalar> s;
      for (std::size_t i = 0; i < base.dim(); ++i) s.push_back(rnd(true));
      Algebra A = rebase(base, perm, s);
      ASSERT_TRUE(validate_algebra(A).ok()) << name;
      for (int trial = 0; trial < 100; ++trial) {
        auto element = [&] {
          std::vector<Scalar> v;
          for (std::size_t i = 0; i < A.dim(); ++i) v.push_back(rnd(false));
          return A.element(v);
        };
        auto x = element(), y = element(), z = element();
        ASSERT_EQ(multiply(x, y), multiply(y, x));
        ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
      }
    }
  }
}

}  // namespace
}  // namespace hochschild
