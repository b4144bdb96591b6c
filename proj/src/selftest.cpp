#include "braces/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "braces/catalog.hpp"
#include "braces/classify.hpp"
#include "braces/extension.hpp"
#include "braces/ybe.hpp"

namespace braces {

namespace {

struct Ctx {
  const SelftestOptions& opts;
  std::map<int, std::vector<CatalogBrace>> p3, small;

  bool wants(int p) const { return std::find(opts.primes.begin(), opts.primes.end(), p) != opts.primes.end(); }
  std::vector<int> primes_in(std::initializer_list<int> allowed) const {
    std::vector<int> out;
    for (int p : allowed)
      if (wants(p)) out.push_back(p);
    return out;
  }
  const std::vector<CatalogBrace>& cat(int p) {
    auto it = p3.find(p);
    if (it == p3.end()) it = p3.emplace(p, catalog_p3(p)).first;
    return it->second;
  }
  const std::vector<CatalogBrace>& cat_small(int p) {
    auto it = small.find(p);
    if (it == small.end()) it = small.emplace(p, small_catalog(p)).first;
    return it->second;
  }
  std::vector<const CatalogBrace*> all(int p) {
    std::vector<const CatalogBrace*> out;
    for (const auto& c : cat_small(p)) out.push_back(&c);
    for (const auto& c : cat(p)) out.push_back(&c);
    return out;
  }
};

// Collects failures; the criterion passes when there are none.
struct Tally {
  std::vector<std::string> failures;
  std::ostringstream info;
  void fail(const std::string& s) { failures.push_back(s); }
  void expect(bool ok, const std::string& s) {
    if (!ok) fail(s);
  }
};

void c1_axioms(Ctx& ctx, Tally& t) {
  const std::map<int, std::size_t> expected{{2, 27}, {3, 37}, {5, 49}};
  for (int p : ctx.primes_in({2, 3, 5})) {
    const auto& cat = ctx.cat(p);
    t.expect(cat.size() == expected.at(p), "p=" + std::to_string(p) + ": " + std::to_string(cat.size()) + " entries");
    for (const auto& c : cat) {
      const VerifyReport r = verify_brace(c.brace.additive(), c.brace.table());
      if (!r.ok()) t.fail(c.entry.id + ": " + r.violation->to_string());
    }
    t.info << "p=" << p << ": " << cat.size() << " entries verified; ";
  }
}

void c2_socle(Ctx& ctx, Tally& t) {
  for (int p : ctx.primes_in({2, 3, 5})) {
    for (const auto& c : ctx.cat(p)) {
      const int s = socle(c.brace).order;
      t.expect(s == c.entry.socle_order, c.entry.id + ": socle " + std::to_string(s));
    }
    t.info << "p=" << p << " ok; ";
  }
}

// Independent re-derivation of each corrected annotation: the printed group
// is refuted by commutativity (Z/p x Z/p^2 printed as non-abelian) or by the
// exponent (M3 has an element of order p^2).
bool printed_group_refuted(const Brace& B, const GroupName& printed) {
  const bool abelian = is_multiplicatively_abelian(B);
  const bool printed_abelian = printed.kind == GroupName::Kind::Cyclic || printed.kind == GroupName::Kind::ZpxZp2 ||
                               printed.kind == GroupName::Kind::ZpxZp || printed.kind == GroupName::Kind::Elementary3;
  if (abelian != printed_abelian) return true;
  const auto orders = multiplicative_orders(B);
  const int exponent = *std::max_element(orders.begin(), orders.end());
  if (printed.kind == GroupName::Kind::M3p) return exponent != printed.p * printed.p;
  if (printed.kind == GroupName::Kind::Mp) return exponent != printed.p;
  return false;
}

void c3_mult_group(Ctx& ctx, Tally& t) {
  int rows = 0, corrected = 0;
  for (int p : ctx.primes_in({2, 3, 5})) {
    const auto errata = annotation_errata(p);
    for (const auto& c : ctx.cat(p)) {
      ++rows;
      const GroupName g = mult_group_name(c.brace);
      t.expect(g == c.entry.claimed_mult_group,
               c.entry.id + ": " + g.to_string() + " vs claimed " + c.entry.claimed_mult_group.to_string());
      const bool is_erratum = std::find(errata.begin(), errata.end(), c.entry.id) != errata.end();
      if (is_erratum) {
        ++corrected;
        t.expect(!(c.entry.printed_mult_group == c.entry.claimed_mult_group),
                 c.entry.id + ": listed as corrected but printed annotation agrees");
        t.expect(printed_group_refuted(c.brace, c.entry.printed_mult_group),
                 c.entry.id + ": printed " + c.entry.printed_mult_group.to_string() + " not refuted");
      } else {
        t.expect(c.entry.printed_mult_group == c.entry.claimed_mult_group,
                 c.entry.id + ": printed and claimed annotations differ");
      }
    }
  }
  t.info << rows << " rows match; " << corrected << " printed annotations refuted and corrected";
}

void c4_quotients(Ctx& ctx, Tally& t) {
  int checked = 0;
  for (int p : ctx.primes_in({2, 3})) {
    for (const CatalogBrace* c : ctx.all(p)) {
      const auto& e = c->entry;
      if (e.socle_order == 1) continue;
      ++checked;
      const Brace Q = quotient_by_socle(c->brace);
      std::optional<Brace> target;
      if (e.quotient_type == "1") {
        target = Brace::trivial(AbelianGroup(p, {1}));
      } else {
        const std::string id = small_entry_id(p, e.quotient_type);
        for (const auto& s : ctx.cat_small(p))
          if (s.entry.id == id) target = s.brace;
      }
      if (!target) {
        t.fail(e.id + ": no declared quotient type");
        continue;
      }
      t.expect(are_isomorphic(Q, *target).has_value(), e.id + ": quotient not isomorphic to type " + e.quotient_type);

      try {
        const ExtensionData d = extension_from_brace(c->brace);
        const VerifyReport r = check_extension_data(d);
        if (!r.ok()) {
          t.fail(e.id + ": converse datum invalid: " + r.violation->to_string());
          continue;
        }
        const Brace rebuilt = build_extension(d);
        t.expect(are_isomorphic(rebuilt, c->brace).has_value(), e.id + ": rebuilt brace not isomorphic");
      } catch (const std::exception& ex) {
        t.fail(e.id + ": " + ex.what());
      }
    }
  }
  t.info << checked << " entries with nontrivial socle round-tripped";
}

void c5_pairwise(Ctx& ctx, Tally& t) {
  std::vector<int> ps = ctx.primes_in({2, 3});
  if (ctx.opts.deep && ctx.wants(5)) ps.push_back(5);
  const std::map<int, std::size_t> expected{{2, 27}, {3, 37}, {5, 49}};
  for (int p : ps) {
    const ClassificationReport r = classify_catalog(p);
    bool singletons = true;
    for (const auto& cls : r.classes)
      if (cls.size() != 1) {
        singletons = false;
        t.fail("p=" + std::to_string(p) + ": isomorphic entries " + cls[0] + " ~ " + cls[1]);
      }
    t.expect(r.classes.size() == expected.at(p), "p=" + std::to_string(p) + ": " + std::to_string(r.classes.size()) + " classes");
    t.info << "p=" << p << ": " << r.classes.size() << (singletons ? " singleton" : "") << " classes; ";
  }
}

// Enumerates A up to isomorphism and matches the classes one-to-one with
// the catalog entries on A.
void match_enumeration(Ctx& ctx, Tally& t, const AbelianGroup& A, std::size_t expected, std::size_t* total) {
  EnumerateOptions o;
  o.jobs = ctx.opts.jobs;
  const EnumerationResult res = enumerate_braces(A, o);
  const std::string s = A.shape_name();
  if (res.status != EnumStatus::Complete) {
    t.fail(s + ": enumeration incomplete");
    return;
  }
  std::vector<const CatalogBrace*> entries;
  for (const auto& c : ctx.cat(A.p()))
    if (c.brace.additive() == A) entries.push_back(&c);
  t.expect(res.braces.size() == expected, s + ": " + std::to_string(res.braces.size()) + " classes, expected " + std::to_string(expected));
  t.expect(entries.size() == expected, s + ": catalog has " + std::to_string(entries.size()));
  std::vector<int> hits(entries.size(), 0);
  for (const Brace& b : res.braces) {
    int matches = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (are_isomorphic(b, entries[i]->brace)) {
        ++matches;
        ++hits[i];
      }
    t.expect(matches == 1, s + ": an enumerated class matches " + std::to_string(matches) + " entries");
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    t.expect(hits[i] == 1, entries[i]->entry.id + " matched " + std::to_string(hits[i]) + " times");
  t.info << s << " " << res.braces.size() << "; ";
  if (total) *total += res.braces.size();
}

void c6_order8(Ctx& ctx, Tally& t) {
  if (!ctx.wants(2)) return;
  match_enumeration(ctx, t, AbelianGroup::cyclic(2, 3), 5, nullptr);
  match_enumeration(ctx, t, AbelianGroup::mixed(2), 14, nullptr);
  match_enumeration(ctx, t, AbelianGroup::elementary(2, 3), 8, nullptr);
}

void c7_order27(Ctx& ctx, Tally& t) {
  if (!ctx.wants(3)) return;
  auto sub = [&](const AbelianGroup& A) {
    return static_cast<std::size_t>(std::count_if(ctx.cat(3).begin(), ctx.cat(3).end(),
                                                  [&](const CatalogBrace& c) { return c.brace.additive() == A; }));
  };
  std::size_t total = 0;
  match_enumeration(ctx, t, AbelianGroup::cyclic(3, 3), 3, &total);
  match_enumeration(ctx, t, AbelianGroup::mixed(3), sub(AbelianGroup::mixed(3)), &total);
  if (ctx.opts.deep) {
    match_enumeration(ctx, t, AbelianGroup::elementary(3, 3), sub(AbelianGroup::elementary(3, 3)), &total);
    t.expect(total == 37, "order 27 total " + std::to_string(total));
    t.info << "total " << total;
  } else {
    t.info << "(Z/3)^3 skipped (deep)";
  }
}

int automorphism_index(const std::vector<Automorphism>& dom, const Automorphism& a) {
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == a) return static_cast<int>(i);
  return -1;
}

void c8_nonexistence(Ctx& ctx, Tally& t) {
  for (int p : ctx.primes_in({3, 5})) {
    const NonexistenceReport r = nonexistence_checks(p);
    for (const auto& c : r.cases) {
      if (c.sylow_order < static_cast<std::uint64_t>(ipow(p, 3))) continue;  // Z/p^3: no regular subgroup fits, nothing to search
      t.expect(c.cocycles == 0, "p=" + std::to_string(p) + " " + c.shape + ": " + std::to_string(c.cocycles) + " cocycles");
      t.info << c.shape << " " << c.cocycles << " (" << c.candidates << " candidates); ";
    }
    if (p == 3) {
      for (const AbelianGroup& A : {AbelianGroup::mixed(3), AbelianGroup::elementary(3, 3)}) {
        EnumerateOptions o;
        o.trivial_socle_only = true;
        o.jobs = ctx.opts.jobs;
        const auto res = enumerate_braces(A, o);
        t.expect(res.status == EnumStatus::Complete && res.braces.empty(),
                 A.shape_name() + ": trivial-socle enumeration found " + std::to_string(res.braces.size()));
        t.info << A.shape_name() << " enumeration empty; ";
      }
    }
  }
  if (!ctx.wants(2)) return;

  auto single_class = [&](const AbelianGroup& A) -> std::optional<Brace> {
    EnumerateOptions o;
    o.trivial_socle_only = true;
    const auto res = enumerate_braces(A, o);
    t.expect(res.braces.size() == 1, A.shape_name() + ": " + std::to_string(res.braces.size()) + " trivial-socle classes");
    if (res.braces.size() != 1) return std::nullopt;
    t.info << A.shape_name() << " 1 class; ";
    return res.braces.front();
  };

  const NonexistenceReport r2 = nonexistence_checks(2);
  for (const auto& c : r2.cases)
    if (c.cocycles > 0) t.expect(c.classes == 1, c.shape + ": cocycle braces form " + std::to_string(c.classes) + " classes");

  const AbelianGroup E = AbelianGroup::elementary(2, 3);
  if (auto cls = single_class(E)) {
    for (int k = 1; k <= 4; ++k) {
      const CocycleTable ct = t2_cocycle(k);
      const VerifyReport v = verify_cocycle(ct);
      if (!v.ok()) {
        t.fail("(Z/2)^3 case " + std::to_string(k) + ": " + v.violation->to_string());
        continue;
      }
      t.expect(are_isomorphic(brace_from_cocycle(ct), *cls).has_value(), "(Z/2)^3 case " + std::to_string(k) + " not in the class");
    }
    t.info << "4 cocycles collapse; ";
  }

  const AbelianGroup M = AbelianGroup::mixed(2);
  if (auto cls = single_class(M)) {
    const std::vector<Automorphism> dom = sylow_subgroup(M);
    const int g1 = automorphism_index(dom, Automorphism(MixedMatrix(2, 1, 1, 1, 1)));  // (1 1; 2 1)
    const int g2 = automorphism_index(dom, Automorphism(MixedMatrix(2, 1, 0, 1, 1)));  // (1 0; 2 1)
    if (g1 < 0 || g2 < 0) {
      t.fail("generators missing from the Sylow subgroup");
      return;
    }
    int found = 0;
    for (const Coords& v : {Coords{0, 1}, Coords{1, 1}, Coords{0, 3}, Coords{1, 3}}) {
      const CocycleSearch s = search_cocycles(M, dom, {g1, g2}, {M.element(v).index, std::nullopt});
      t.expect(!s.cocycles.empty(), "no cocycle with the assignment (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")");
      for (const auto& ct : s.cocycles) {
        ++found;
        t.expect(are_isomorphic(brace_from_cocycle(ct), *cls).has_value(), "Z/2xZ/4 cocycle outside the class");
      }
    }
    t.info << "4 assignments give " << found << " cocycles, one class";
  }
}

void c9_ybe(Ctx& ctx, Tally& t) {
  for (int p : ctx.primes_in({2, 3})) {
    std::size_t n = 0;
    for (const CatalogBrace* c : ctx.all(p)) {
      try {
        const SolutionMap m = solution_from_brace(c->brace, ctx.opts.jobs);
        const bool trivial = socle(c->brace).order == c->brace.order();
        t.expect(m.is_flip() == trivial, c->entry.id + ": flip iff trivial fails");
        ++n;
      } catch (const std::exception& e) {
        t.fail(c->entry.id + ": " + e.what());
      }
    }
    t.info << "p=" << p << ": " << n << " solutions; ";
  }
}

void c10_powers(Ctx& ctx, Tally& t) {
  std::uint64_t checks = 0;
  for (int p : ctx.primes_in({2, 3})) {
    for (const CatalogBrace* c : ctx.all(p)) {
      const Brace& B = c->brace;
      const int n = B.order();
      for (int x = 0; x < n; ++x) {
        int iter = 0;
        for (int k = 0; k <= 2 * n; ++k) {
          if (power_index(B, x, static_cast<std::uint64_t>(k)) != iter) {
            t.fail(c->entry.id + ": x=" + std::to_string(x) + " n=" + std::to_string(k));
            break;
          }
          ++checks;
          iter = B.mul(iter, x);
        }
      }
    }
  }
  t.info << checks << " (x, n) pairs";
}

// Straightforward re-check of the axioms, written independently of verify_brace.
bool naive_is_brace(const AbelianGroup& A, const std::vector<int>& tab) {
  const int n = A.order();
  auto m = [&](int a, int b) { return tab[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    if (m(0, a) != a || m(a, 0) != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = m(a, b) == 0 && m(b, a) == 0;
    if (!has) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (A.add(m(a, A.add(b, c)), a) != A.add(m(a, b), m(a, c))) return false;
  return true;
}

void c11_mutations(Ctx& ctx, Tally& t) {
  std::vector<const CatalogBrace*> pool;
  for (int p : ctx.primes_in({2, 3}))
    for (const CatalogBrace* c : ctx.all(p)) pool.push_back(c);
  if (pool.empty()) return;
  std::mt19937 rng(ctx.opts.seed);
  int invalid = 0, detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CatalogBrace& c = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int n = c.brace.order();
    std::vector<int> tab = c.brace.table();
    const std::size_t cell = std::uniform_int_distribution<std::size_t>(0, tab.size() - 1)(rng);
    const int shift = std::uniform_int_distribution<int>(1, n - 1)(rng);
    tab[cell] = (tab[cell] + shift) % n;

    const bool really_invalid = !naive_is_brace(c.brace.additive(), tab);
    bool flagged = !verify_brace(c.brace.additive(), tab).ok();
    if (!flagged) flagged = !verify_yang_baxter(solution_from_brace(Brace(c.brace.additive(), tab))).ok();
    if (really_invalid) {
      ++invalid;
      if (flagged) ++detected;
      else t.fail(c.entry.id + ": mutation at cell " + std::to_string(cell) + " missed");
    } else {
      t.expect(!flagged, c.entry.id + ": valid mutation flagged");
    }
  }
  t.info << detected << "/" << invalid << " invalid mutations detected (seed " << ctx.opts.seed << ")";
}

struct CriterionDef {
  int id;
  const char* title;
  void (*run)(Ctx&, Tally&);
};

const CriterionDef kCriteria[] = {
    {1, "axiom suite", c1_axioms},
    {2, "socle conformance", c2_socle},
    {3, "multiplicative group conformance", c3_mult_group},
    {4, "quotient round-trip", c4_quotients},
    {5, "pairwise non-isomorphism", c5_pairwise},
    {6, "completeness, order 8", c6_order8},
    {7, "completeness, order 27", c7_order27},
    {8, "trivial-socle nonexistence", c8_nonexistence},
    {9, "Yang-Baxter suite", c9_ybe},
    {10, "power formula", c10_powers},
    {11, "mutation sensitivity", c11_mutations},
};

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  Ctx ctx{opts, {}, {}};
  std::vector<CriterionResult> out;
  for (const CriterionDef& s : kCriteria) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), s.id) == opts.only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    try {
      s.run(ctx, t);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    CriterionResult r{s.id, s.title, t.failures.empty(), {}, 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass) {
      r.detail = t.info.str();
    } else {
      r.detail = std::to_string(t.failures.size()) + " failure(s): " + t.failures.front();
    }
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s criterion %2d %-34s %7.2fs  ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace braces
