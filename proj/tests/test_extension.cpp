#include <gtest/gtest.h>

#include "braces/catalog.hpp"
#include "braces/classify.hpp"
#include "braces/extension.hpp"

using namespace braces;

namespace {

Automorphism jordan2(int p) { return Automorphism(GLMatrix::from_rows(p, {{1, 1}, {0, 1}})); }
Automorphism jordan3(int p) { return Automorphism(GLMatrix::from_rows(p, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})); }
Automorphism jordan21(int p) { return Automorphism(GLMatrix::from_rows(p, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})); }

std::string soc_p2_id(int p, const std::string& f) {
  const std::string P = std::to_string(p);
  return P + "^3.z" + P + "xz" + P + "xz" + P + ".soc" + std::to_string(p * p) + "." + f;
}

// Datum over the type (iii) brace on Z/4: sigma(z) = A^z B^(1+...+(z-1)),
// h(x, y) = 2*alpha*x + y.
ExtensionData quotient_iii_case(int alpha, const MixedMatrix& A, const MixedMatrix& Bm) {
  const AbelianGroup H = AbelianGroup::mixed(2);
  const Brace Q = build_entry(find_entry(small_entry_id(2, "iii")));
  ExtensionData d{H, Q, {}, {}};
  for (int z = 0; z < 4; ++z)
    d.sigma.push_back(Automorphism(mixed_mul(mixed_pow(A, static_cast<std::uint64_t>(z)),
                                             mixed_pow(Bm, tri_sum(static_cast<std::uint64_t>(z))))));
  for (int m = 0; m < H.order(); ++m) {
    const Coords c = H.coords(m);
    d.h.push_back(static_cast<int>(mod(2 * alpha * c[0] + c[1], 4)));
  }
  return d;
}

}  // namespace

TEST(ExtensionCheck, OrderOneQuotient) {
  const AbelianGroup H = AbelianGroup::mixed(3);
  const AbelianGroup one(3, {1});
  const ExtensionData d{H, Brace::trivial(one), {Automorphism::identity(H)}, std::vector<int>(27, 0)};
  EXPECT_TRUE(check_extension_data(d).ok());
  EXPECT_EQ(build_extension(d), Brace::trivial(H));
}

TEST(ExtensionCheck, JordanWithInvariantRow) {
  for (int p : {2, 3, 5}) {
    const AbelianGroup H = AbelianGroup::elementary(p, 2);
    const ExtensionData good = cyclic_extension(H, jordan2(p), {0, 1});
    ASSERT_TRUE(check_extension_data(good).ok());
    const Brace B = build_extension(good);
    EXPECT_EQ(B, build_entry(find_entry(small_entry_id(p, "v"))));

    const ExtensionData bad = cyclic_extension(H, jordan2(p), {1, 0});
    const VerifyReport r = check_extension_data(bad);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.violation->axiom.find("compatibility"), std::string::npos);
    EXPECT_EQ(r.violation->witness.size(), 2u);
    EXPECT_THROW(build_extension(bad), BraceError);
  }
}

TEST(ExtensionCheck, ShapeErrors) {
  const AbelianGroup H = AbelianGroup::elementary(3, 2);
  ExtensionData d = cyclic_extension(H, jordan2(3), {0, 1});
  d.h.pop_back();
  EXPECT_THROW(check_extension_data(d), ShapeError);
  ExtensionData d2 = cyclic_extension(H, jordan2(3), {0, 1});
  d2.sigma[1] = jordan3(3);
  EXPECT_THROW(check_extension_data(d2), ShapeError);
}

TEST(ExtensionCheck, NonInjectiveSigma) {
  const AbelianGroup H = AbelianGroup::elementary(3, 2);
  ExtensionData d = cyclic_extension(H, Automorphism::identity(H), {0, 1});
  const VerifyReport r = check_extension_data(d);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->axiom, "sigma is not injective");
}

TEST(BuildExtension, JordanThreeGivesCatalogFamily) {
  for (int p : {3, 5}) {
    const ExtensionData d = cyclic_extension(AbelianGroup::elementary(p, 3), jordan3(p), {0, 0, 1});
    const Brace B = build_extension(d);
    EXPECT_EQ(B, build_entry(find_entry(soc_p2_id(p, "f3"))));
  }
}

TEST(BuildExtension, InvariantsOnBuiltBraces) {
  for (int p : {2, 3}) {
    for (const auto& c : catalog_p3(p)) {
      if (c.entry.socle_order == 1) continue;
      const ExtensionData d = extension_from_brace(c.brace);
      const Brace G = build_extension(d);
      for (int u = 0; u < G.order(); ++u) {
        ASSERT_EQ(G.lambda(u), d.sigma[static_cast<std::size_t>(d.h[static_cast<std::size_t>(u)])].as_permutation(d.H));
        for (int v = 0; v < G.order(); ++v)
          ASSERT_EQ(d.h[static_cast<std::size_t>(G.mul(u, v))],
                    d.B.mul(d.h[static_cast<std::size_t>(u)], d.h[static_cast<std::size_t>(v)]));
      }
    }
  }
}

TEST(Converse, RoundTripsCatalog) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      if (c.entry.socle_order == 1) continue;
      const ExtensionData d = extension_from_brace(c.brace);
      ASSERT_TRUE(check_extension_data(d).ok()) << c.entry.id;
      EXPECT_TRUE(are_isomorphic(build_extension(d), c.brace)) << c.entry.id;
    }
}

TEST(Converse, RepresentativeChoiceIrrelevant) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      if (c.entry.socle_order == 1) continue;
      const SocleQuotient q = socle_quotient(c.brace);
      // largest element of each coset instead of the smallest
      std::vector<int> reps(static_cast<std::size_t>(q.quotient.order()), -1);
      for (int a = 0; a < c.brace.order(); ++a) reps[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(a)])] = a;
      const ExtensionData d1 = extension_from_brace(c.brace);
      const ExtensionData d2 = extension_from_brace(c.brace, reps);
      ASSERT_TRUE(check_extension_data(d2).ok());
      EXPECT_TRUE(sigma_h_equivalent(d1, d2).has_value()) << c.entry.id;
    }
  const Brace B = build_entry(find_entry("2^3.z8.soc2.f1"));
  std::vector<int> wrong = socle_quotient(B).representative;
  std::swap(wrong[1], wrong[2]);
  EXPECT_THROW(extension_from_brace(B, wrong), ShapeError);
}

TEST(SigmaH, Reflexive) {
  const ExtensionData d = cyclic_extension(AbelianGroup::elementary(3, 3), jordan3(3), {0, 0, 1});
  const auto F = sigma_h_equivalent(d, d);
  ASSERT_TRUE(F.has_value());
  EXPECT_TRUE(F->is_identity());
}

TEST(SigmaH, ScalarRescalesRow) {
  for (int p : {3, 5}) {
    const AbelianGroup H = AbelianGroup::elementary(p, 3);
    const ExtensionData d1 = cyclic_extension(H, jordan3(p), {0, 0, 1});
    for (int k = 2; k < p; ++k) {
      const ExtensionData dk = cyclic_extension(H, jordan3(p), {0, 0, k});
      ASSERT_TRUE(check_extension_data(dk).ok());
      // sigma'(h'(m)) = F^-1 sigma(h(F m)) F for F = k^-1 Id, with d = dk, d' = d1
      const std::int64_t kinv = inverse_mod(k, p);
      const Automorphism F(GLMatrix::from_rows(p, {{kinv, 0, 0}, {0, kinv, 0}, {0, 0, kinv}}));
      const Perm f = F.as_permutation(H);
      for (int m = 0; m < H.order(); ++m) {
        const Perm lhs = compose_perm(f, d1.sigma[static_cast<std::size_t>(d1.h[static_cast<std::size_t>(m)])].as_permutation(H));
        const Perm rhs = compose_perm(dk.sigma[static_cast<std::size_t>(dk.h[static_cast<std::size_t>(f[static_cast<std::size_t>(m)])])].as_permutation(H), f);
        ASSERT_EQ(lhs, rhs);
      }
      EXPECT_TRUE(sigma_h_equivalent(dk, d1).has_value());
      EXPECT_TRUE(sigma_h_equivalent(d1, dk).has_value());
    }
  }
}

TEST(SigmaH, DistinctSocleSquareCases) {
  for (int p : {2, 3}) {
    const AbelianGroup H = AbelianGroup::elementary(p, 3);
    const ExtensionData c2 = cyclic_extension(H, jordan21(p), {0, 1, 0});
    const ExtensionData c3 = cyclic_extension(H, jordan21(p), {0, 0, 1});
    ASSERT_TRUE(check_extension_data(c2).ok());
    ASSERT_TRUE(check_extension_data(c3).ok());
    EXPECT_FALSE(sigma_h_equivalent(c2, c3).has_value()) << p;
    EXPECT_FALSE(are_isomorphic(build_extension(c2), build_extension(c3)));
  }
}

TEST(SigmaH, QuotientTypeIiiCasesCollapse) {
  const std::vector<ExtensionData> cases{
      quotient_iii_case(0, MixedMatrix(2, 1, 0, 0, 3), MixedMatrix(2, 1, 1, 0, 1)),
      quotient_iii_case(0, MixedMatrix(2, 1, 1, 0, 3), MixedMatrix(2, 1, 1, 0, 1)),
      quotient_iii_case(1, MixedMatrix(2, 1, 1, 0, 1), MixedMatrix(2, 1, 1, 0, 3)),
      quotient_iii_case(1, MixedMatrix(2, 1, 0, 0, 3), MixedMatrix(2, 1, 1, 0, 3)),
  };
  const Brace listed = build_entry(find_entry("2^3.z2xz4.soc2.f6"));
  for (const auto& d : cases) {
    ASSERT_TRUE(check_extension_data(d).ok());
    EXPECT_TRUE(are_isomorphic(build_extension(d), listed));
    for (const auto& d2 : cases) EXPECT_TRUE(sigma_h_equivalent(d, d2).has_value());
  }
}

TEST(SigmaH, AgreesWithIsomorphismSearch) {
  for (int p : {2, 3}) {
    std::vector<std::pair<std::string, ExtensionData>> data;
    for (const auto& c : catalog_p3(p))
      if (c.entry.socle_order > 1 && c.entry.socle_order < c.brace.order())
        data.emplace_back(c.entry.id, extension_from_brace(c.brace));
    int compared = 0;
    for (std::size_t i = 0; i < data.size(); ++i)
      for (std::size_t j = 0; j < data.size(); ++j) {
        const auto& a = data[i].second;
        const auto& b = data[j].second;
        if (!(a.H == b.H) || !(a.B == b.B)) continue;
        ++compared;
        EXPECT_EQ(sigma_h_equivalent(a, b).has_value(), are_isomorphic(build_extension(a), build_extension(b)).has_value())
            << data[i].first << " vs " << data[j].first;
        EXPECT_EQ(sigma_h_equivalent(a, b).has_value(), i == j);
      }
    EXPECT_GT(compared, static_cast<int>(data.size()));
  }
}
