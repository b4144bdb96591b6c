#include <gtest/gtest.h>

#include "braces/brace.hpp"
#include "braces/catalog.hpp"
#include "braces/classify.hpp"

using namespace braces;

namespace {

Brace entry(const std::string& id) { return build_entry(find_entry(id)); }

Brace type_v(int p) { return entry(small_entry_id(p, "v")); }

Brace zp3_pxy(int p) {
  const AbelianGroup A = AbelianGroup::cyclic(p, 3);
  const std::int64_t n = A.order();
  return Brace::from_product(A, [&](int x, int y) { return static_cast<int>(mod(x + y + p * x * y, n)); });
}

}  // namespace

TEST(VerifyBrace, TrivialTablesPass) {
  for (const AbelianGroup& A : {AbelianGroup::cyclic(2, 3), AbelianGroup::mixed(3), AbelianGroup::elementary(2, 2)}) {
    std::vector<int> t;
    for (int a = 0; a < A.order(); ++a)
      for (int b = 0; b < A.order(); ++b) t.push_back(A.add(a, b));
    EXPECT_TRUE(verify_brace(A, t).ok());
  }
}

TEST(VerifyBrace, CyclicEightTwoXY) {
  const AbelianGroup A = AbelianGroup::cyclic(2, 3);
  std::vector<int> t;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t.push_back((x + y + 2 * x * y) % 8);
  EXPECT_TRUE(verify_brace(A, t).ok());
}

TEST(VerifyBrace, SwappedEntryCaught) {
  const AbelianGroup A = AbelianGroup::elementary(2, 2);
  std::vector<int> t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.push_back(A.add(a, b));
  std::swap(t[1 * 4 + 2], t[1 * 4 + 3]);
  const VerifyReport r = verify_brace(A, t);
  ASSERT_FALSE(r.ok());
  EXPECT_FALSE(r.violation->witness.empty());
  EXPECT_NE(r.violation->to_string().find("fails at"), std::string::npos);
}

TEST(VerifyBrace, NeutralMustBeZero) {
  // a valid group table whose neutral element is 1, not 0
  const AbelianGroup A = AbelianGroup::cyclic(3, 1);
  std::vector<int> t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t.push_back((a + b + 2) % 3);
  const VerifyReport r = verify_brace(A, t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->axiom, "neutral element 0");
}

TEST(VerifyBrace, MalformedTablesThrow) {
  const AbelianGroup A = AbelianGroup::cyclic(2, 1);
  EXPECT_THROW(verify_brace(A, {0, 1, 1}), BraceError);
  EXPECT_THROW(verify_brace(A, {0, 1, 1, 2}), BraceError);
  EXPECT_THROW(Brace(A, {0, 1, 1, 1}), BraceError);
}

TEST(Lambda, TrivialIsIdentity) {
  const Brace B = Brace::trivial(AbelianGroup::mixed(3));
  for (int a = 0; a < B.order(); ++a) EXPECT_EQ(B.lambda(a), identity_perm(B.order()));
}

TEST(Lambda, TypeVIsJordan) {
  for (int p : {2, 3, 5}) {
    const Brace B = type_v(p);
    const Automorphism l = lambda_of(B, B.additive().element(Coords{0, 1}));
    EXPECT_EQ(l, Automorphism(GLMatrix::from_rows(p, {{1, 1}, {0, 1}}))) << l.to_string();
  }
}

TEST(Lambda, IsMultiplicativeOnCatalog) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      const Brace& B = c.brace;
      for (int a = 0; a < B.order(); ++a)
        for (int b = 0; b < B.order(); ++b)
          ASSERT_EQ(B.lambda(B.mul(a, b)), compose_perm(B.lambda(a), B.lambda(b))) << c.entry.id;
    }
}

TEST(Lambda, InverseFormula) {
  // u^-1 = -lambda_u^-1(u)
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      const Brace& B = c.brace;
      for (int u = 0; u < B.order(); ++u)
        ASSERT_EQ(B.inv(u), B.additive().neg(inverse_perm(B.lambda(u))[static_cast<std::size_t>(u)])) << c.entry.id;
    }
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(Brace::trivial(AbelianGroup::elementary(3, 3))).order, 27);
  for (int p : {2, 3, 5}) {
    EXPECT_EQ(socle(zp3_pxy(p)).order, p);
    const Brace V = type_v(p);
    const SocleInfo s = socle(V);
    EXPECT_EQ(s.order, p);
    for (int e : s.elements) EXPECT_EQ(V.additive().coords(e)[1], 0);
  }
}

TEST(Socle, ActsTriviallyOnCatalog) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      const SocleInfo s = socle(c.brace);
      EXPECT_EQ(c.brace.order() % s.order, 0);
      for (int a : s.elements)
        for (int b = 0; b < c.brace.order(); ++b) ASSERT_EQ(c.brace.mul(a, b), c.brace.additive().add(a, b));
    }
}

TEST(Power, Examples) {
  const Brace T = Brace::trivial(AbelianGroup::mixed(3));
  for (int x = 0; x < T.order(); ++x)
    for (std::uint64_t n = 0; n < 12; ++n) EXPECT_EQ(power_index(T, x, n), T.additive().scale(x, static_cast<std::int64_t>(n)));
  const Brace V = type_v(2);
  const GroupElement x = V.additive().element(Coords{0, 1});
  EXPECT_EQ(power(V, x, 2).coords, (Coords{1, 0}));
  EXPECT_EQ(power(V, x, 4).coords, (Coords{0, 0}));
  EXPECT_EQ(power(V, x, 3).coords, (Coords{1, 1}));
}

TEST(MultGroup, Examples) {
  EXPECT_EQ(mult_group_name(entry("2^3.z8.soc4.f1(alpha=1)")).to_string(), "Q");
  EXPECT_EQ(mult_group_name(entry("2^3.z8.soc4.f1(alpha=3)")).kind, GroupName::Kind::D4);
  EXPECT_EQ(mult_group_name(Brace::trivial(AbelianGroup::elementary(2, 3))), GroupName::of(GroupName::Kind::Elementary3, 2));
  // two-sided non-abelian brace on (Z/2)^3 with socle 4
  EXPECT_EQ(mult_group_name(entry("2^3.z2xz2xz2.soc4.f2")).kind, GroupName::Kind::D4);
  EXPECT_EQ(mult_group_name(Brace::trivial(AbelianGroup::cyclic(5, 2))), GroupName::cyclic(5, 2));
  EXPECT_EQ(mult_group_name(entry(small_entry_id(2, "iii"))).kind, GroupName::Kind::ZpxZp);
}

TEST(GroupName, ParseRoundTrip) {
  for (const GroupName& g : {GroupName::cyclic(3, 3), GroupName::of(GroupName::Kind::ZpxZp2, 5),
                             GroupName::of(GroupName::Kind::ZpxZp, 2), GroupName::of(GroupName::Kind::Elementary3, 3),
                             GroupName::of(GroupName::Kind::D4, 2), GroupName::of(GroupName::Kind::Q, 2),
                             GroupName::of(GroupName::Kind::Mp, 7), GroupName::of(GroupName::Kind::M3p, 3)})
    EXPECT_EQ(GroupName::parse(g.to_string()), g) << g.to_string();
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_by_socle(Brace::trivial(AbelianGroup::mixed(2))).order(), 1);
  for (int p : {2, 3}) {
    const Brace Q = quotient_by_socle(zp3_pxy(p));
    EXPECT_TRUE(are_isomorphic(Q, entry(small_entry_id(p, "iii")))) << p;
    const Brace QV = quotient_by_socle(type_v(p));
    EXPECT_EQ(QV.order(), p);
    EXPECT_EQ(socle(QV).order, p);
  }
}

TEST(Quotient, IteratesToTrivial) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      if (c.entry.socle_order == 1) continue;
      Brace B = c.brace;
      int steps = 0;
      while (socle(B).order != B.order()) {
        const int s = socle(B).order;
        ASSERT_GT(s, 1) << c.entry.id;
        B = quotient_by_socle(B);
        ASSERT_LT(++steps, 4);
      }
    }
}

TEST(RightBrace, JordanCaseWitness) {
  for (int p : {3, 5}) {
    const std::string P = std::to_string(p), base = P + "^3.z" + P + "xz" + P + "xz" + P + ".soc" + std::to_string(p * p);
    const Brace B = entry(base + ".f3");
    const auto w = right_brace_violation(B);
    ASSERT_TRUE(w.has_value());
    const int e = B.additive().index({0, 0, 1});
    EXPECT_EQ(*w, (std::array<int, 3>{e, e, e}));
    const AbelianGroup& A = B.additive();
    const auto [b, c, a] = *w;
    EXPECT_NE(A.add(B.mul(A.add(b, c), a), a), A.add(B.mul(b, a), B.mul(c, a)));
    EXPECT_FALSE(right_brace_violation(entry(base + ".f1")));
    EXPECT_FALSE(right_brace_violation(entry(base + ".f2")));
  }
}

TEST(Cocycle, OrderOneGroup) {
  const AbelianGroup one(2, {1});
  const CocycleTable c{one, {Automorphism::identity(one)}, {0}};
  ASSERT_TRUE(verify_cocycle(c).ok());
  const Brace B = brace_from_cocycle(c);
  EXPECT_EQ(B.order(), 1);
}

TEST(Cocycle, ElementaryCaseOneMatchesClosedForm) {
  const CocycleTable c = t2_cocycle(1);
  ASSERT_TRUE(verify_cocycle(c).ok());
  const Brace B = brace_from_cocycle(c);
  EXPECT_EQ(socle(B).order, 1);
  EXPECT_EQ(B, entry("2^3.z2xz2xz2.soc1.f1"));
  const AbelianGroup& A = c.group;
  // (1,0,0) is sent to (1 0 1; 0 1 1; 0 0 1)
  const Automorphism target(GLMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
  bool found = false;
  for (std::size_t i = 0; i < c.domain.size(); ++i)
    if (c.domain[i] == target) {
      EXPECT_EQ(c.pi[i], A.index({1, 0, 0}));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cocycle, AllFourElementaryCasesValid) {
  for (int k = 1; k <= 4; ++k) {
    const CocycleTable c = t2_cocycle(k);
    ASSERT_TRUE(verify_cocycle(c).ok()) << k;
    EXPECT_EQ(socle(brace_from_cocycle(c)).order, 1);
  }
}

TEST(Cocycle, MixedListedTable) {
  const CocycleTable c = m2_listed_cocycle();
  ASSERT_TRUE(verify_cocycle(c).ok());
  const Brace B = brace_from_cocycle(c);
  EXPECT_EQ(socle(B).order, 1);
  EXPECT_EQ(B, entry("2^3.z2xz4.soc1.f1"));
  // lambda = pi^-1
  for (std::size_t i = 0; i < c.domain.size(); ++i)
    EXPECT_EQ(B.lambda(c.pi[i]), c.domain[i].as_permutation(c.group));
}

TEST(Cocycle, PrintedMixedClosedFormIsNotBijective) {
  const CocycleTable c = m2_printed_closed_form();
  const VerifyReport r = verify_cocycle(c);
  ASSERT_FALSE(r.ok());
  EXPECT_THROW(brace_from_cocycle(c), BraceError);
}
