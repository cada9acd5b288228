#include <random>

#include <gtest/gtest.h>

#include "hochschild/cochain.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/fixtures.hpp"

namespace hochschild {
namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF101 = FieldSpec::prime(101);

std::vector<std::size_t> identity_table(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return t;
}

TEST(BasisIndexer, RoundTripsAndOrdersRightmostFastest) {
  BasisIndexer idx({3, 3, 2, 2});
  EXPECT_EQ(idx.size(), 36u);
  std::vector<std::size_t> digits(4);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx.decode(i, digits);
    ASSERT_EQ(idx.encode(digits), i);
  }
  std::vector<std::size_t> last{0, 0, 0, 1};
  EXPECT_EQ(idx.encode(last), 1u);
  EXPECT_EQ(BasisIndexer({}).size(), 1u);
}

TEST(CochainSpace, Dimensions) {
  Triple t = fixture_triple(kQ, "truncated_poly_3", "dual_numbers");
  CochainSpace c({11, 5}, t);  // disk level 4
  EXPECT_EQ(c.a_factors(), 4u);
  EXPECT_EQ(c.b_factors(), 6u);
  EXPECT_EQ(c.total_dim(), 3u * 81u * 64u);
}

TEST(InducedMap, IdentityGivesIdentity) {
  Triple t = fixture_triple(kQ, "dual_numbers", "dual_numbers");
  for (LevelSize level : {LevelSize{1, 1}, LevelSize{3, 2}, LevelSize{4, 3}}) {
    auto m = induced_map(level, level, identity_table(level.y_size), t);
    EXPECT_EQ(m, SparseMatrix::identity(kQ, CochainSpace(level, t).total_dim()));
  }
}

TEST(InducedMap, RegularActionFromBasepointFiber) {
  // Hom(k, M) -> Hom(A, M), f ↦ (a ↦ a f(1)); rows (a, l), columns k.
  Triple t = fixture_triple(kQ, "dual_numbers", "ground_field");
  auto m = induced_map({2, 2}, {1, 1}, std::vector<std::size_t>{0, 0}, t);
  const Scalar one = Scalar::one(kQ);
  auto expected = SparseMatrix::from_triplets(kQ, 4, 2, {{0, 0, one}, {1, 1, one}, {3, 0, one}});
  EXPECT_EQ(m, expected);
}

TEST(InducedMap, SquareZeroInBasepointFiberKillsTheRowBlock) {
  // Everything collapses to *, so b_0 = a_1 a_2 and x·x = 0.
  Triple t = fixture_triple(kQ, "dual_numbers", "ground_field");
  auto m = induced_map({3, 3}, {1, 1}, std::vector<std::size_t>{0, 0, 0}, t);
  ASSERT_EQ(m.rows(), 8u);
  const std::size_t x_tensor = 1 * 2 + 1;  // (x, x)
  for (std::size_t l = 0; l < 2; ++l) EXPECT_TRUE(m.row(x_tensor * 2 + l).empty());
  EXPECT_FALSE(m.row(0).empty());
}

TEST(InducedMap, EpsilonEntersThroughUFibersAndEmptyBFibersAreUnits) {
  // (U1,V1) = ({*,1},{*,1,2}) -> (U2,V2) = ({*,1},{*,1,2}), 1 ↦ 1, 2 ↦ 1:
  // ψ ↦ (a ⊗ α ↦ ψ(a ε(α) ⊗ 1_B)). With A = B = dual numbers, ε(y) = x.
  Triple t = fixture_triple(kQ, "dual_numbers", "dual_numbers");
  auto m = induced_map({3, 2}, {3, 2}, std::vector<std::size_t>{0, 1, 1}, t);
  const Scalar one = Scalar::one(kQ);
  auto row = [](std::size_t a, std::size_t alpha, std::size_t l) { return (a * 2 + alpha) * 2 + l; };
  auto col = row;
  for (std::size_t l = 0; l < 2; ++l) {
    EXPECT_EQ(m.at(row(0, 0, l), col(0, 0, l)), one);  // 1 ⊗ 1 -> 1 ⊗ 1
    EXPECT_EQ(m.at(row(0, 1, l), col(1, 0, l)), one);  // 1 ⊗ y -> x ⊗ 1
    EXPECT_EQ(m.at(row(1, 0, l), col(1, 0, l)), one);  // x ⊗ 1 -> x ⊗ 1
    EXPECT_TRUE(m.row(row(1, 1, l)).empty());           // x ⊗ y -> x^2 = 0
  }
  EXPECT_EQ(m.nnz(), 6u);
}

TEST(InducedMap, RejectsInvalidTables) {
  Triple t = fixture_triple(kQ, "dual_numbers", "dual_numbers");
  EXPECT_THROW(induced_map({3, 2}, {3, 2}, std::vector<std::size_t>{1, 1, 1}, t), UsageError);
  EXPECT_THROW(induced_map({3, 2}, {3, 2}, std::vector<std::size_t>{0, 2, 1}, t), UsageError);
  EXPECT_THROW(induced_map({3, 2}, {3, 2}, std::vector<std::size_t>{0, 1, 3}, t), UsageError);
  EXPECT_THROW(induced_map({3, 2}, {3, 2}, std::vector<std::size_t>{0, 1}, t), UsageError);
}

TEST(InducedMapProperty, ContravariantFunctorOnRandomGamma2Maps) {
  std::mt19937_64 rng(99);
  auto random_level = [&] {
    std::size_t x = 1 + rng() % 3;
    return LevelSize{x + rng() % 3, x};
  };
  auto random_map = [&](LevelSize from, LevelSize to) {
    std::vector<std::size_t> t(from.y_size, 0);
    for (std::size_t e = 1; e < from.y_size; ++e) t[e] = e < from.x_size ? rng() % to.x_size : rng() % to.y_size;
    return t;
  };
  for (FieldSpec field : {kQ, kF101}) {
    for (auto a : {"truncated_poly_3", "product_kk"}) {
      Triple t = fixture_triple(field, a, "dual_numbers");
      for (int trial = 0; trial < 25; ++trial) {
        LevelSize l1 = random_level(), l2 = random_level(), l3 = random_level();
        auto f = random_map(l1, l2);
        auto g = random_map(l2, l3);
        std::vector<std::size_t> gf(l1.y_size);
        for (std::size_t e = 0; e < gf.size(); ++e) gf[e] = g[f[e]];
        ASSERT_EQ(induced_map(l1, l3, gf, t), induced_map(l1, l2, f, t) * induced_map(l2, l3, g, t));
      }
    }
  }
}

TEST(InducedMapProperty, FunctorialOnComposedFaceMaps) {
  Triple t = fixture_triple(kQ, "truncated_poly_3", "dual_numbers");
  auto disk = build_disk_pair(4);
  for (std::size_t q = 0; q + 2 <= 4; ++q) {
    for (std::size_t i = 0; i <= q + 1; ++i) {
      for (std::size_t j = 0; j <= q + 2; ++j) {
        auto f = disk.face(q + 2, j);
        auto g = disk.face(q + 1, i);
        std::vector<std::size_t> gf(f.size());
        for (std::size_t e = 0; e < f.size(); ++e) gf[e] = g[f[e]];
        ASSERT_EQ(induced_map(disk.level(q + 2), disk.level(q), gf, t),
                  induced_map(disk.level(q + 2), disk.level(q + 1), f, t) *
                      induced_map(disk.level(q + 1), disk.level(q), g, t));
      }
    }
  }
}

TEST(PairDifferential, SymmetricModuleKillsDegreeZero) {
  Triple t = fixture_triple(kQ, "dual_numbers", "ground_field");
  auto d0 = pair_differential(build_circle_pair(2), 0, t);
  EXPECT_EQ(d0.rows(), 4u);
  EXPECT_EQ(d0.cols(), 2u);
  EXPECT_TRUE(d0.is_zero());
}

TEST(PairDifferential, PointAlternatesZeroAndIdentity) {
  Triple t = fixture_triple(kQ, "dual_numbers", "dual_numbers");
  auto p = build_point(6);
  for (std::size_t q = 0; q < 6; ++q) {
    auto d = pair_differential(p, q, t);
    if (q % 2 == 0) {
      EXPECT_TRUE(d.is_zero()) << q;
    } else {
      EXPECT_EQ(d, SparseMatrix::identity(kQ, 2)) << q;
    }
  }
}

TEST(PairDifferential, OutOfRangeDegree) {
  Triple t = fixture_triple(kQ, "ground_field", "ground_field");
  EXPECT_THROW(pair_differential(build_disk_pair(3), 3, t), UsageError);
  EXPECT_THROW(differential_square_defect(build_disk_pair(3), 2, t), UsageError);
}

TEST(PairDifferential, SquaresToZeroOnFixtures) {
  for (FieldSpec field : {kQ, kF101}) {
    for (auto a : kFixtureAlgebrasA) {
      for (auto b : kFixtureAlgebrasB) {
        Triple t = fixture_triple(field, a, b);
        for (const auto& pair : {build_point(4), build_circle_pair(4), build_disk_pair(4)}) {
          for (std::size_t q = 0; q + 1 < 3; ++q) {
            auto square = pair_differential(pair, q + 1, t) * pair_differential(pair, q, t);
            ASSERT_TRUE(square.is_zero()) << a << "/" << b << " q=" << q;
            ASSERT_FALSE(differential_square_defect(pair, q, t).has_value());
          }
        }
      }
    }
  }
}

TEST(PairDifferential, StreamedSquareCheckFindsDefects) {
  // A non-simplicial pair: swapping two faces breaks the identities and d^2.
  auto disk = build_disk_pair(3);
  std::vector<LevelSize> levels;
  std::vector<std::vector<SimplicialPair::FaceTable>> faces(4);
  for (std::size_t q = 0; q <= 3; ++q) {
    levels.push_back(disk.level(q));
    for (std::size_t i = 0; q > 0 && i <= q; ++i) {
      auto f = disk.face(q, i);
      faces[q].emplace_back(f.begin(), f.end());
    }
  }
  std::swap(faces[3][0], faces[3][1]);
  SimplicialPair broken(levels, faces);
  Triple t = fixture_triple(kQ, "dual_numbers", "dual_numbers");
  auto defect = differential_square_defect(broken, 1, t);
  ASSERT_TRUE(defect.has_value());
  auto square = pair_differential(broken, 2, t) * pair_differential(broken, 1, t);
  EXPECT_FALSE(square.is_zero());
  EXPECT_EQ(square.at(defect->row, defect->col), defect->lhs);
}

TEST(ClassicalDifferential, Examples) {
  Triple t = fixture_triple(kQ, "dual_numbers", "ground_field");
  EXPECT_TRUE(classical_differential(0, t.A, t.M).is_zero());
  // n = 1: (δf)(a⊗b) = a f(b) − f(ab) + f(a) b at f = x^* ⊗ m_1 (coordinate 1*2+1 = 3),
  // evaluated on (x, 1): x f(1) - f(x) + f(x) 1 = 0 - x + x = 0 -> no entry in rows (x,1,·).
  auto d1 = classical_differential(1, t.A, t.M);
  EXPECT_EQ(d1.rows(), 8u);
  EXPECT_EQ(d1.cols(), 4u);
  // On (1, 1): f(1) - f(1) + f(1) = f(1): row block of (1,1) is the identity on f(1).
  const Scalar one = Scalar::one(kQ);
  EXPECT_EQ(d1.at(0, 0), one);
  EXPECT_EQ(d1.at(1, 1), one);
  // On (x, x): x f(x) - f(x^2) + f(x) x = 2 x f(x); with f(x) = 1 this is 2x.
  std::size_t xx = 3;
  EXPECT_EQ(d1.at(xx * 2 + 1, 1 * 2 + 0), Scalar::from_int(kQ, 2));

  Triple k = fixture_triple(kQ, "ground_field", "ground_field");
  for (std::size_t n = 0; n < 6; ++n) {
    auto d = classical_differential(n, k.A, k.M);
    EXPECT_EQ(d, n % 2 == 0 ? SparseMatrix(kQ, 1, 1) : SparseMatrix::identity(kQ, 1)) << n;
  }
}

TEST(ClassicalDifferential, EqualsCirclePairDifferential) {
  for (FieldSpec field : {kQ, kF101}) {
    for (auto a : kFixtureAlgebrasA) {
      Triple t = fixture_triple(field, a, "dual_numbers");
      auto circle = build_circle_pair(4);
      for (std::size_t n = 0; n < 4; ++n) {
        ASSERT_EQ(pair_differential(circle, n, t), classical_differential(n, t.A, t.M)) << a << " n=" << n;
      }
    }
  }
}

TEST(Pullback, IdentityMorphism) {
  auto disk = build_disk_pair(3);
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t q = 0; q <= 3; ++q) maps.push_back(identity_table(disk.level(q).y_size));
  PairMorphism id(disk, disk, maps);
  Triple t = fixture_triple(kF101, "truncated_poly_3", "dual_numbers");
  for (std::size_t q = 0; q <= 3; ++q) {
    EXPECT_EQ(pair_pullback(id, q, t), SparseMatrix::identity(kF101, CochainSpace(disk.level(q), t).total_dim()));
  }
}

TEST(Pullback, PhiEvaluatesAtUnitBFactors) {
  Triple t = fixture_triple(kQ, "truncated_poly_3", "dual_numbers");
  auto h = inclusion_circle_into_disk(4);
  for (std::size_t q = 0; q <= 4; ++q) {
    auto phi = pair_pullback(h, q, t);
    CochainSpace circle(h.source().level(q), t);
    CochainSpace disk(h.target().level(q), t);
    ASSERT_EQ(phi.rows(), circle.total_dim());
    ASSERT_EQ(phi.cols(), disk.total_dim());
    const std::size_t b_block = disk.tensors().size() / circle.tensors().size();
    for (std::size_t r = 0; r < phi.rows(); ++r) {
      auto row = phi.row(r);
      ASSERT_EQ(row.size(), 1u);
      std::size_t tensor = r / 3;
      std::size_t l = r % 3;
      // (a_1..a_q) followed by all B digits = 0 (the unit of B).
      EXPECT_EQ(row[0].col, disk.coordinate(tensor * b_block, l));
      EXPECT_TRUE(row[0].value.is_one());
    }
  }
}

TEST(Pullback, PhiIsACochainMap) {
  auto h = inclusion_circle_into_disk(4);
  for (auto a : kFixtureAlgebrasA) {
    Triple t = fixture_triple(kQ, a, "dual_numbers");
    for (std::size_t q = 0; q <= 3; ++q) {
      auto lhs = pair_pullback(h, q + 1, t) * pair_differential(h.target(), q, t);
      auto rhs = pair_differential(h.source(), q, t) * pair_pullback(h, q, t);
      ASSERT_EQ(lhs, rhs) << a << " q=" << q;
    }
  }
}

}  // namespace
}  // namespace hochschild
