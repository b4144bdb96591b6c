#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braces/catalog.hpp"
#include "braces/classify.hpp"

using namespace braces;

namespace {

Brace entry(const std::string& id) { return build_entry(find_entry(id)); }

// B transported along an additive automorphism f: x * y = f(f^-1 x . f^-1 y)
Brace relabel(const Brace& B, const Perm& f) {
  const Perm g = inverse_perm(f);
  return Brace::from_product(B.additive(), [&](int x, int y) {
    return f[static_cast<std::size_t>(B.mul(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]))];
  });
}

std::size_t brace_automorphisms(const Brace& B) {
  std::size_t n = 0;
  for_each_automorphism(B.additive(), [&](const Automorphism& F) {
    n += is_isomorphism(B, B, F.as_permutation(B.additive()));
    return true;
  });
  return n;
}

}  // namespace

TEST(AreIsomorphic, SelfGivesIdentity) {
  const Brace B = entry("3^3.z3xz9.soc3.f4");
  const auto w = are_isomorphic(B, B);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->F.is_identity());
}

TEST(AreIsomorphic, SocleOrdersSeparate) {
  for (int p : {2, 3}) {
    const Brace iv = entry(small_entry_id(p, "iv"));
    const Brace v = entry(small_entry_id(p, "v"));
    EXPECT_FALSE(are_isomorphic(iv, v));
    EXPECT_FALSE(fingerprint(iv) == fingerprint(v));
  }
}

TEST(AreIsomorphic, DihedralVersusQuaternion) {
  EXPECT_FALSE(are_isomorphic(entry("2^3.z8.soc4.f1(alpha=1)"), entry("2^3.z8.soc4.f1(alpha=3)")));
  const Brace q = entry("2^3.z2xz2xz2.soc2.f3");
  EXPECT_FALSE(are_isomorphic(q, entry("2^3.z2xz2xz2.soc2.f2")));
  EXPECT_FALSE(are_isomorphic(q, entry("2^3.z2xz2xz2.soc2.f4")));
}

TEST(AreIsomorphic, DifferentShapesShortCircuit) {
  EXPECT_FALSE(are_isomorphic(Brace::trivial(AbelianGroup::cyclic(2, 3)), Brace::trivial(AbelianGroup::mixed(2))));
}

TEST(AreIsomorphic, RelabeledCopiesAndWitnessAlgebra) {
  for (int p : {2, 3})
    for (const auto& c : catalog_p3(p)) {
      const auto autos = automorphism_group(c.brace.additive());
      const Perm f = autos[autos.size() / 2].as_permutation(c.brace.additive());
      const Perm g = autos[autos.size() / 3].as_permutation(c.brace.additive());
      const Brace B1 = relabel(c.brace, f);
      const Brace B2 = relabel(B1, g);
      const auto w01 = are_isomorphic(c.brace, B1);
      const auto w12 = are_isomorphic(B1, B2);
      const auto w10 = are_isomorphic(B1, c.brace);
      ASSERT_TRUE(w01 && w12 && w10) << c.entry.id;
      EXPECT_TRUE(is_isomorphism(B1, c.brace, inverse_perm(w01->perm)));
      EXPECT_TRUE(is_isomorphism(c.brace, B2, compose_perm(w12->perm, w01->perm)));
      EXPECT_EQ(fingerprint(B2), fingerprint(c.brace));
    }
}

TEST(ClassifyCatalog, SingletonsAtTwo) {
  const auto r = classify_catalog(2);
  EXPECT_EQ(r.classes.size(), 27u);
  for (const auto& cls : r.classes) EXPECT_EQ(cls.size(), 1u);
  for (std::size_t i = 0; i < r.classes.size(); ++i) EXPECT_EQ(r.representatives[i], r.classes[i].front());
}

TEST(ClassifyCatalog, SingletonsAtThree) {
  const auto r = classify_catalog(3);
  EXPECT_EQ(r.classes.size(), 37u);
  for (const auto& cls : r.classes) EXPECT_EQ(cls.size(), 1u);
}

TEST(ClassifyCatalog, RelabeledCopyPairsUp) {
  std::vector<std::pair<std::string, Brace>> all;
  for (const auto& c : catalog_p3(2)) {
    const auto autos = automorphism_group(c.brace.additive());
    all.emplace_back(c.entry.id, c.brace);
    all.emplace_back(c.entry.id + "'", relabel(c.brace, autos.back().as_permutation(c.brace.additive())));
  }
  const auto r = classify(all);
  EXPECT_EQ(r.classes.size(), 27u);
  for (const auto& cls : r.classes) {
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_EQ(cls[0] + "'", cls[1]);
  }
}

TEST(Enumerate, OrdersPAndPSquared) {
  for (int p : {2, 3, 5}) {
    EXPECT_EQ(enumerate_braces(AbelianGroup::cyclic(p, 1)).braces.size(), 1u);
    EXPECT_EQ(enumerate_braces(AbelianGroup::cyclic(p, 2)).braces.size(), 2u);
    EXPECT_EQ(enumerate_braces(AbelianGroup::elementary(p, 2)).braces.size(), 2u);
  }
}

TEST(Enumerate, OrderEightMatchesCatalog) {
  std::size_t total = 0;
  for (const AbelianGroup& A : {AbelianGroup::cyclic(2, 3), AbelianGroup::mixed(2), AbelianGroup::elementary(2, 3)}) {
    const auto r = enumerate_braces(A);
    ASSERT_EQ(r.status, EnumStatus::Complete);
    total += r.braces.size();
    std::vector<std::pair<std::string, Brace>> mixed;
    for (const auto& c : catalog_p3(2))
      if (c.brace.additive() == A) mixed.emplace_back(c.entry.id, c.brace);
    for (std::size_t i = 0; i < r.braces.size(); ++i) mixed.emplace_back("~" + std::to_string(i), r.braces[i]);
    const auto cls = classify(mixed);
    EXPECT_EQ(cls.classes.size(), r.braces.size());
    for (const auto& c : cls.classes) {
      ASSERT_EQ(c.size(), 2u) << A.shape_name();
      EXPECT_NE(c[0][0], '~');
      EXPECT_EQ(c[1][0], '~');
    }
  }
  EXPECT_EQ(total, 27u);
}

TEST(Enumerate, AllModeMatchesOrbitCounts) {
  for (const AbelianGroup& A : {AbelianGroup::cyclic(2, 3), AbelianGroup::mixed(2), AbelianGroup::elementary(2, 3),
                                AbelianGroup::cyclic(3, 3), AbelianGroup::elementary(3, 2)}) {
    EnumerateOptions all;
    all.up_to_iso = false;
    const auto every = enumerate_braces(A, all);
    const auto reps = enumerate_braces(A);
    std::size_t expected = 0;
    for (const Brace& b : reps.braces) expected += automorphism_count(A) / brace_automorphisms(b);
    EXPECT_EQ(every.braces.size(), expected) << A.shape_name();
    for (const Brace& b : every.braces) EXPECT_TRUE(verify_brace(A, b.table()).ok());
  }
}

TEST(Enumerate, FingerprintsConstantOnOrbits) {
  EnumerateOptions all;
  all.up_to_iso = false;
  const AbelianGroup A = AbelianGroup::mixed(2);
  const auto reps = enumerate_braces(A).braces;
  for (const Brace& b : enumerate_braces(A, all).braces) {
    int matches = 0;
    for (const Brace& r : reps)
      if (are_isomorphic(b, r)) {
        ++matches;
        EXPECT_EQ(fingerprint(b), fingerprint(r));
      }
    EXPECT_EQ(matches, 1);
  }
}

TEST(Enumerate, JobsDoNotChangeOutput) {
  EnumerateOptions o1, o3;
  o3.jobs = 3;
  const AbelianGroup A = AbelianGroup::mixed(3);
  const auto a = enumerate_braces(A, o1), b = enumerate_braces(A, o3);
  EXPECT_EQ(a.braces, b.braces);
  EXPECT_EQ(a.solutions, b.solutions);
}

TEST(Enumerate, TrivialSocle) {
  EnumerateOptions o;
  o.trivial_socle_only = true;
  EXPECT_EQ(enumerate_braces(AbelianGroup::elementary(2, 3), o).braces.size(), 1u);
  EXPECT_EQ(enumerate_braces(AbelianGroup::mixed(2), o).braces.size(), 1u);
  EXPECT_EQ(enumerate_braces(AbelianGroup::cyclic(2, 3), o).braces.size(), 0u);
  EXPECT_EQ(enumerate_braces(AbelianGroup::mixed(3), o).braces.size(), 0u);
}

TEST(Enumerate, CheckpointAndResume) {
  const std::string path = (std::filesystem::temp_directory_path() / "braces_ckpt_test.txt").string();
  std::filesystem::remove(path);
  EnumerateOptions o;
  o.checkpoint_path = path;
  o.max_nodes = 40;
  const AbelianGroup A = AbelianGroup::mixed(2);
  const auto partial = enumerate_braces(A, o);
  EXPECT_EQ(partial.status, EnumStatus::ResourceBound);
  EXPECT_LT(partial.seeds_done, partial.seeds_total);
  {
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# braces-enumeration 1");
  }
  o.max_nodes = 0;
  const auto done = enumerate_braces(A, o);
  EXPECT_EQ(done.status, EnumStatus::Complete);
  EXPECT_EQ(done.braces, enumerate_braces(A).braces);

  // a checkpoint for another shape is refused
  EXPECT_THROW(enumerate_braces(AbelianGroup::cyclic(2, 3), o), EnumerationError);
  std::filesystem::remove(path);
}

TEST(Nonexistence, OddPrimes) {
  for (int p : {3, 5, 7}) {
    const auto r = nonexistence_checks(p);
    for (const auto& c : r.cases) EXPECT_EQ(c.cocycles, 0u) << p << " " << c.shape;
  }
}

TEST(Nonexistence, TwoHasOneClassPerShape) {
  const auto r = nonexistence_checks(2);
  int with_cocycles = 0;
  for (const auto& c : r.cases)
    if (c.cocycles) {
      ++with_cocycles;
      EXPECT_EQ(c.classes, 1u) << c.shape;
    }
  EXPECT_EQ(with_cocycles, 2);
}

TEST(Sylow, SubgroupOrders) {
  for (int p : {2, 3}) {
    EXPECT_EQ(sylow_subgroup(AbelianGroup::elementary(p, 3)).size(), static_cast<std::size_t>(p * p * p));
    EXPECT_EQ(sylow_subgroup(AbelianGroup::mixed(p)).size(), static_cast<std::size_t>(p * p * p));
    EXPECT_EQ(sylow_subgroup(AbelianGroup::cyclic(p, 3)).size(), static_cast<std::size_t>(p == 2 ? 4 : p * p));
  }
}
