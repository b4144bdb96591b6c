#include <gtest/gtest.h>

#include <set>

#include "braces/abelian.hpp"

using namespace braces;

namespace {

// plain integer matrix product followed by row-wise reduction
MixedMatrix int_product(const MixedMatrix& A, const MixedMatrix& B) {
  const int p = A.p;
  const std::int64_t a[2][2] = {{A.x, A.y}, {p * A.z, A.t}};
  const std::int64_t b[2][2] = {{B.x, B.y}, {p * B.z, B.t}};
  std::int64_t c[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return MixedMatrix(p, mod(c[0][0], p), mod(c[0][1], p), mod(c[1][0], p * p) / p, mod(c[1][1], p * p));
}

std::vector<MixedMatrix> all_mixed(int p) {
  std::vector<MixedMatrix> out;
  for (int x = 1; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z)
        for (int t = 0; t < p * p; ++t)
          if (t % p) out.emplace_back(p, x, y, z, t);
  return out;
}

}  // namespace

TEST(AbelianGroup, Shapes) {
  EXPECT_EQ(AbelianGroup::mixed(3).order(), 27);
  EXPECT_EQ(AbelianGroup::mixed(2).shape_name(), "z2xz4");
  EXPECT_EQ(AbelianGroup::elementary(3, 3).generic_shape_name(), "zpxzpxzp");
  EXPECT_EQ(AbelianGroup::parse(5, "zpxzp2"), AbelianGroup::mixed(5));
  EXPECT_EQ(AbelianGroup::parse(2, "z8"), AbelianGroup::cyclic(2, 3));
  EXPECT_EQ(AbelianGroup(2, {4, 2}), AbelianGroup::mixed(2));
  EXPECT_THROW(AbelianGroup(2, {2, 8}), ShapeError);
  EXPECT_THROW(AbelianGroup(4, {4}), ShapeError);
  EXPECT_THROW(AbelianGroup(2, {6}), ShapeError);
  EXPECT_THROW(AbelianGroup::parse(2, "q8"), ShapeError);
}

TEST(AbelianGroup, MixedRadixLastCoordinateFastest) {
  const AbelianGroup A = AbelianGroup::mixed(2);
  EXPECT_EQ(A.index({1, 3}), 7);
  EXPECT_EQ(A.coords(5), (Coords{1, 1}));
  for (int i = 0; i < A.order(); ++i) EXPECT_EQ(A.index(A.coords(i)), i);
  EXPECT_EQ(A.add(A.index({1, 3}), A.index({1, 2})), A.index({0, 1}));
}

TEST(MixedMatrix, ProductExample) {
  const MixedMatrix P = mixed_mul(MixedMatrix(2, 1, 1, 1, 1), MixedMatrix(2, 1, 0, 1, 1));
  EXPECT_EQ(P, MixedMatrix(2, 1, 1, 0, 1));
  const MixedMatrix A(3, 2, 1, 2, 5);
  EXPECT_EQ(mixed_mul(A, MixedMatrix::identity(3)), A);
  EXPECT_EQ(mixed_mul(MixedMatrix::identity(3), A), A);
}

TEST(MixedMatrix, AgreesWithIntegerProduct) {
  for (int p : {2, 3}) {
    const auto M = all_mixed(p);
    for (const auto& A : M)
      for (const auto& B : M) ASSERT_EQ(mixed_mul(A, B), int_product(A, B));
  }
}

TEST(MixedMatrix, Associative) {
  const auto M = all_mixed(2);
  for (const auto& A : M)
    for (const auto& B : M)
      for (const auto& C : M) ASSERT_EQ(mixed_mul(mixed_mul(A, B), C), mixed_mul(A, mixed_mul(B, C)));
}

TEST(MixedMatrix, ClosedPower) {
  EXPECT_EQ(mixed_pow(MixedMatrix(2, 1, 1, 1, 1), 2), MixedMatrix(2, 1, 0, 0, 3));
  for (int p : {2, 3}) {
    for (const MixedMatrix& A : sylow_Mp(p)) {
      EXPECT_EQ(mixed_pow(A, 0), MixedMatrix::identity(p));
      MixedMatrix it = MixedMatrix::identity(p);
      for (int n = 0; n <= 9; ++n) {
        ASSERT_EQ(mixed_pow(A, static_cast<std::uint64_t>(n)), it);
        it = mixed_mul(it, A);
      }
    }
  }
  EXPECT_THROW(mixed_pow(MixedMatrix(3, 2, 0, 0, 1), 2), ArithmeticError);
}

TEST(Sylow, TpIsUnitriangularSubgroup) {
  for (int p : {2, 3}) {
    const auto T = sylow_Tp(p);
    ASSERT_EQ(T.size(), static_cast<std::size_t>(p * p * p));
    std::set<std::array<std::int64_t, 9>> elems;
    for (const auto& m : T) {
      EXPECT_EQ(m.det(), 1);
      elems.insert(m.a);
    }
    for (const auto& a : T)
      for (const auto& b : T) EXPECT_TRUE(elems.count((a * b).a));
  }
}

TEST(Sylow, ElementOrders) {
  // every element of T_p, M_p has order dividing p^2; for odd p T_p has exponent p
  for (int p : {2, 3, 5}) {
    for (const auto& m : sylow_Tp(p)) {
      EXPECT_TRUE(m.pow(static_cast<std::uint64_t>(p * p)) == GLMatrix::identity(p, 3));
      if (p > 2) EXPECT_TRUE(m.pow(static_cast<std::uint64_t>(p)) == GLMatrix::identity(p, 3));
    }
    for (const auto& m : sylow_Mp(p)) EXPECT_EQ(mixed_pow(m, static_cast<std::uint64_t>(p * p)), MixedMatrix::identity(p));
  }
  // at p = 2 the 3x3 Jordan block has order 4
  const GLMatrix J = GLMatrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  EXPECT_FALSE(J.pow(2) == GLMatrix::identity(2, 3));
  EXPECT_TRUE(J.pow(4) == GLMatrix::identity(2, 3));
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphism_group(AbelianGroup::mixed(2)).size(), 8u);
  EXPECT_EQ(automorphism_count(AbelianGroup::mixed(3)), 27u * 4u);
  EXPECT_EQ(automorphism_group(AbelianGroup::cyclic(5, 1)).size(), 4u);
  EXPECT_EQ(automorphism_group(AbelianGroup::cyclic(3, 3)).size(), 18u);
  EXPECT_EQ(automorphism_group(AbelianGroup::elementary(2, 3)).size(), 168u);
  EXPECT_EQ(automorphism_count(AbelianGroup::elementary(3, 3)), 26u * 24u * 18u);
  EXPECT_EQ(automorphism_count(AbelianGroup::elementary(3, 2)), 48u);
}

TEST(Automorphisms, EachOnceAndAdditive) {
  for (int p : {2, 3})
    for (const AbelianGroup& A : {AbelianGroup::cyclic(p, 1), AbelianGroup::cyclic(p, 2), AbelianGroup::cyclic(p, 3),
                                  AbelianGroup::elementary(p, 2), AbelianGroup::elementary(p, 3), AbelianGroup::mixed(p)}) {
      std::set<Perm> seen;
      for_each_automorphism(A, [&](const Automorphism& f) {
        const Perm perm = f.as_permutation(A);
        EXPECT_TRUE(seen.insert(perm).second) << A.shape_name();
        EXPECT_EQ(std::set<int>(perm.begin(), perm.end()).size(), perm.size());
        if (A.order() <= 9 || p == 2)
          for (int a = 0; a < A.order(); ++a)
            for (int b = 0; b < A.order(); ++b)
              EXPECT_EQ(perm[static_cast<std::size_t>(A.add(a, b))], A.add(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
        return true;
      });
      EXPECT_EQ(seen.size(), automorphism_count(A)) << A.shape_name();
    }
}

TEST(Automorphisms, Apply) {
  const AbelianGroup V = AbelianGroup::elementary(5, 2);
  const Automorphism J(GLMatrix::from_rows(5, {{1, 1}, {0, 1}}));
  for (int i = 0; i < V.order(); ++i) {
    const Coords c = V.coords(i);
    EXPECT_EQ(J.apply(c), (Coords{mod(c[0] + c[1], 5), c[1]}));
    EXPECT_EQ(Automorphism::identity(V).apply(c), c);
  }
  const Automorphism M(MixedMatrix(2, 1, 1, 1, 1));
  EXPECT_EQ(M.apply(Coords{1, 1}), (Coords{0, 3}));
  EXPECT_THROW(M.apply_index(V, 0), ShapeError);
}

TEST(Automorphisms, PermutationRoundTrip) {
  const AbelianGroup A = AbelianGroup::mixed(3);
  for (const auto& f : automorphism_group(A)) {
    EXPECT_EQ(Automorphism::from_permutation(A, f.as_permutation(A)), f);
    EXPECT_EQ(f.compose(f.inverse()).as_permutation(A), identity_perm(A.order()));
  }
  Perm bad = identity_perm(A.order());
  std::swap(bad[1], bad[2]);
  EXPECT_THROW(Automorphism::from_permutation(A, bad), ShapeError);
}

TEST(Holomorph, GroupLaw) {
  const AbelianGroup A = AbelianGroup::mixed(2);
  std::vector<HolomorphElement> H;
  for (int a = 0; a < A.order(); ++a)
    for (const auto& f : automorphism_group(A)) H.push_back({a, f.as_permutation(A)});
  ASSERT_EQ(H.size(), 64u);
  const HolomorphElement e = holomorph_identity(A);
  for (const auto& x : H) {
    EXPECT_EQ(holomorph_mul(A, x, e), x);
    EXPECT_EQ(holomorph_mul(A, e, x), x);
    EXPECT_EQ(holomorph_mul(A, x, holomorph_inverse(A, x)), e);
  }
  for (const auto& x : H)
    for (const auto& y : H)
      for (const auto& z : H)
        ASSERT_EQ(holomorph_mul(A, holomorph_mul(A, x, y), z), holomorph_mul(A, x, holomorph_mul(A, y, z)));
}
