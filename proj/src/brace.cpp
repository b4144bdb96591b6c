#include "braces/brace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace braces {

std::string Violation::to_string() const {
  std::ostringstream os;
  if (witness.empty()) return axiom;
  os << axiom << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
  os << ")";
  return os.str();
}

namespace {

VerifyReport fail(std::string axiom, std::vector<int> witness) {
  return {Violation{std::move(axiom), std::move(witness)}};
}

}  // namespace

VerifyReport verify_brace(const AbelianGroup& A, const std::vector<int>& table) {
  const int n = A.order();
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw BraceError("table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
  for (int e : table)
    if (e < 0 || e >= n) throw BraceError("table entry " + std::to_string(e) + " out of range");
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) return fail("neutral element 0", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return fail("associativity", {a, b, c});
    }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = mul(a, b) == 0 && mul(b, a) == 0;
    if (!found) return fail("inverse", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (A.add(mul(a, A.add(b, c)), a) != A.add(ab, mul(a, c))) return fail("left brace property", {a, b, c});
    }
  return {};
}

Brace::Brace(AbelianGroup additive, std::vector<int> table, std::string name)
    : additive_(std::move(additive)), table_(std::move(table)), name_(std::move(name)) {
  const VerifyReport r = verify_brace(additive_, table_);
  if (!r.ok()) throw BraceError("not a left brace: " + r.violation->to_string());
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
  lambda_.assign(static_cast<std::size_t>(n), Perm(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) lambda_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = additive_.sub(mul(a, b), a);
}

Brace Brace::trivial(const AbelianGroup& A) {
  return from_product(A, [&](int a, int b) { return A.add(a, b); }, "trivial");
}

Brace Brace::from_product(const AbelianGroup& A, const std::function<int(int, int)>& mul, std::string name) {
  const int n = A.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return {A, std::move(table), std::move(name)};
}

Brace Brace::from_lambda(const AbelianGroup& A, const std::vector<Perm>& lambda, std::string name) {
  if (static_cast<int>(lambda.size()) != A.order()) throw BraceError("lambda table has the wrong length");
  return from_product(
      A, [&](int a, int b) { return A.add(a, lambda[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]); },
      std::move(name));
}

Automorphism lambda_of(const Brace& B, const GroupElement& a) {
  return Automorphism::from_permutation(B.additive(), B.lambda(a.index));
}

SocleInfo socle(const Brace& B) {
  const AbelianGroup& A = B.additive();
  const Perm id = identity_perm(B.order());
  SocleInfo info;
  for (int a = 0; a < B.order(); ++a)
    if (B.lambda(a) == id) info.elements.push_back(a);
  info.order = static_cast<int>(info.elements.size());
  std::vector<char> in(static_cast<std::size_t>(B.order()), 0);
  for (int a : info.elements) in[static_cast<std::size_t>(a)] = 1;
  for (int a : info.elements)
    for (int b : info.elements) {
      if (!in[static_cast<std::size_t>(A.add(a, b))] || B.mul(a, b) != A.add(a, b))
        throw BraceError("socle is not a trivial sub-brace");
    }
  if (B.order() % info.order != 0) throw BraceError("socle order does not divide the brace order");
  return info;
}

int power_index(const Brace& B, int x, std::uint64_t n) {
  const AbelianGroup& A = B.additive();
  const Perm& lx = B.lambda(x);
  int acc = 0, term = x;
  for (std::uint64_t i = 0; i < n; ++i) {
    acc = A.add(acc, term);
    term = lx[static_cast<std::size_t>(term)];
  }
  return acc;
}

GroupElement power(const Brace& B, const GroupElement& x, std::uint64_t n) {
  return B.additive().element(power_index(B, x.index, n));
}

// ------------------------------------------------------------ group names

std::string GroupName::to_string() const {
  const std::string P = std::to_string(p);
  switch (kind) {
    case Kind::Cyclic:
      return "Z/" + std::to_string(ipow(p, k));
    case Kind::ZpxZp2:
      return "Z/" + P + "xZ/" + std::to_string(ipow(p, 2));
    case Kind::ZpxZp:
      return "Z/" + P + "xZ/" + P;
    case Kind::Elementary3:
      return "(Z/" + P + ")^3";
    case Kind::D4:
      return "D4";
    case Kind::Q:
      return "Q";
    case Kind::Mp:
      return "M(" + P + ")";
    case Kind::M3p:
      return "M3(" + P + ")";
  }
  return "?";
}

GroupName GroupName::parse(const std::string& s) {
  if (s == "D4") return of(Kind::D4, 2);
  if (s == "Q") return of(Kind::Q, 2);
  auto num = [&](std::size_t from, std::size_t to) { return std::stoi(s.substr(from, to - from)); };
  try {
    if (s.rfind("M3(", 0) == 0 && s.back() == ')') return of(Kind::M3p, num(3, s.size() - 1));
    if (s.rfind("M(", 0) == 0 && s.back() == ')') return of(Kind::Mp, num(2, s.size() - 1));
    if (s.rfind("(Z/", 0) == 0 && s.size() > 5 && s.substr(s.size() - 3) == ")^3")
      return of(Kind::Elementary3, num(3, s.size() - 3));
    if (s.rfind("Z/", 0) == 0) {
      const std::size_t x = s.find("xZ/");
      if (x == std::string::npos) {
        std::int64_t m = num(2, s.size());
        int p = 2;
        while (m % p != 0) ++p;
        unsigned k = 0;
        for (std::int64_t r = m; r > 1; r /= p) ++k;
        return cyclic(p, k);
      }
      const int a = num(2, x), b = num(x + 3, s.size());
      if (a == b) return of(Kind::ZpxZp, a);
      if (b == a * a) return of(Kind::ZpxZp2, a);
    }
  } catch (const std::logic_error&) {
  }
  throw BraceError("unknown group name '" + s + "'");
}

std::vector<int> multiplicative_orders(const Brace& B) {
  std::vector<int> ord(static_cast<std::size_t>(B.order()));
  for (int a = 0; a < B.order(); ++a) {
    int k = 1;
    for (int x = a; x != 0; x = B.mul(x, a)) ++k;
    ord[static_cast<std::size_t>(a)] = k;
  }
  return ord;
}

bool is_multiplicatively_abelian(const Brace& B) {
  for (int a = 0; a < B.order(); ++a)
    for (int b = a + 1; b < B.order(); ++b)
      if (B.mul(a, b) != B.mul(b, a)) return false;
  return true;
}

namespace {

std::map<int, int> histogram(const std::vector<int>& v) {
  std::map<int, int> h;
  for (int x : v) ++h[x];
  return h;
}

std::map<int, int> abelian_order_histogram(const AbelianGroup& G) {
  std::vector<int> ord;
  for (int a = 0; a < G.order(); ++a) ord.push_back(G.element_order(a));
  return histogram(ord);
}

int prime_of(int n) {
  int p = 2;
  while (n % p != 0) ++p;
  return p;
}

}  // namespace

GroupName mult_group_name(const Brace& B) {
  const int n = B.order();
  if (n == 1) return GroupName::cyclic(B.additive().p(), 0);
  const int p = prime_of(n);
  const auto ord = multiplicative_orders(B);
  const auto hist = histogram(ord);
  const int exponent = hist.rbegin()->first;
  auto mismatch = [&]() {
    return BraceError("multiplicative order statistics of order " + std::to_string(n) + " match no known group");
  };
  if (is_multiplicatively_abelian(B)) {
    GroupName name;
    std::vector<std::int64_t> moduli;
    if (exponent == n) {
      unsigned k = 0;
      for (int r = n; r > 1; r /= p) ++k;
      name = GroupName::cyclic(p, k);
      moduli = {n};
    } else if (n == p * p && exponent == p) {
      name = GroupName::of(GroupName::Kind::ZpxZp, p);
      moduli = {p, p};
    } else if (n == p * p * p && exponent == p * p) {
      name = GroupName::of(GroupName::Kind::ZpxZp2, p);
      moduli = {p, p * p};
    } else if (n == p * p * p && exponent == p) {
      name = GroupName::of(GroupName::Kind::Elementary3, p);
      moduli = {p, p, p};
    } else {
      throw mismatch();
    }
    if (abelian_order_histogram(AbelianGroup(p, moduli)) != hist) throw mismatch();
    return name;
  }
  if (n != p * p * p) throw mismatch();
  if (p == 2) {
    if (hist == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}) return GroupName::of(GroupName::Kind::Q, 2);
    if (hist == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}) return GroupName::of(GroupName::Kind::D4, 2);
    throw mismatch();
  }
  if (hist == std::map<int, int>{{1, 1}, {p, n - 1}}) return GroupName::of(GroupName::Kind::Mp, p);
  if (hist == std::map<int, int>{{1, 1}, {p, p * p - 1}, {p * p, n - p * p}}) return GroupName::of(GroupName::Kind::M3p, p);
  throw mismatch();
}

// --------------------------------------------------------------- quotient

std::pair<AbelianGroup, std::vector<int>> identify_abelian(int p, int n, const std::function<int(int, int)>& add) {
  auto order_of = [&](int a) {
    int k = 1;
    for (int x = a; x != 0; x = add(x, a)) ++k;
    return k;
  };
  int exponent = 1;
  for (int a = 0; a < n; ++a) exponent = std::max(exponent, order_of(a));
  std::vector<std::int64_t> moduli;
  if (n == 1) {
    moduli = {1};
  } else if (exponent == n) {
    moduli = {n};
  } else if (n == p * p && exponent == p) {
    moduli = {p, p};
  } else if (n == p * p * p && exponent == p * p) {
    moduli = {p, p * p};
  } else if (n == p * p * p && exponent == p) {
    moduli = {p, p, p};
  } else {
    throw ShapeError("abstract group of order " + std::to_string(n) + " has no supported shape");
  }
  AbelianGroup G(p, moduli);

  // Greedy basis: largest moduli first, each new generator meeting the span only in 0.
  std::vector<char> span(static_cast<std::size_t>(n), 0);
  span[0] = 1;
  std::vector<int> gens(moduli.size(), 0);
  for (int k = static_cast<int>(moduli.size()) - 1; k >= 0; --k) {
    const auto want = static_cast<int>(moduli[static_cast<std::size_t>(k)]);
    if (want == 1) continue;
    int chosen = -1;
    for (int a = 1; a < n && chosen < 0; ++a) {
      if (order_of(a) != want) continue;
      bool independent = true;
      for (int x = a; x != 0 && independent; x = add(x, a)) independent = !span[static_cast<std::size_t>(x)];
      if (independent) chosen = a;
    }
    if (chosen < 0) throw ShapeError("failed to find a basis of the abstract group");
    gens[static_cast<std::size_t>(k)] = chosen;
    std::vector<int> members;
    for (int s = 0; s < n; ++s)
      if (span[static_cast<std::size_t>(s)]) members.push_back(s);
    for (int s : members)
      for (int x = add(s, chosen); x != s; x = add(x, chosen)) span[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> map(static_cast<std::size_t>(n));
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Coords c = G.coords(i);
    int v = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::int64_t r = 0; r < c[k]; ++r) v = add(v, gens[k]);
    if (hit[static_cast<std::size_t>(v)]) throw ShapeError("basis map is not injective");
    hit[static_cast<std::size_t>(v)] = 1;
    map[static_cast<std::size_t>(i)] = v;
  }
  return {G, map};
}

SocleQuotient socle_quotient(const Brace& B) {
  const AbelianGroup& A = B.additive();
  const int n = B.order();
  const SocleInfo soc = socle(B);

  // coset representative = smallest index in a + Soc
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int m = n;
    for (int s : soc.elements) m = std::min(m, A.add(a, s));
    rep[static_cast<std::size_t>(a)] = m;
  }
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (rep[static_cast<std::size_t>(a)] == a) reps.push_back(a);
  const int q = static_cast<int>(reps.size());
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < q; ++i) slot[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = i;
  auto cls = [&](int a) { return slot[static_cast<std::size_t>(rep[static_cast<std::size_t>(a)])]; };

  // the induced product must not depend on the representatives
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ra = reps[static_cast<std::size_t>(cls(a))], rb = reps[static_cast<std::size_t>(cls(b))];
      if (cls(B.mul(a, b)) != cls(B.mul(ra, rb)) || cls(A.add(a, b)) != cls(A.add(ra, rb)))
        throw BraceError("internal: operations are not well defined on the socle quotient");
    }

  auto qadd = [&](int i, int j) {
    return cls(A.add(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]));
  };
  auto [G, to_slot] = identify_abelian(A.p(), q, qadd);
  std::vector<int> from_slot(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) from_slot[static_cast<std::size_t>(to_slot[static_cast<std::size_t>(i)])] = i;

  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const int a = reps[static_cast<std::size_t>(to_slot[static_cast<std::size_t>(i)])];
      const int b = reps[static_cast<std::size_t>(to_slot[static_cast<std::size_t>(j)])];
      table[static_cast<std::size_t>(i) * q + j] = from_slot[static_cast<std::size_t>(cls(B.mul(a, b)))];
    }
  std::vector<int> projection(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) projection[static_cast<std::size_t>(a)] = from_slot[static_cast<std::size_t>(cls(a))];
  std::vector<int> representative(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    representative[static_cast<std::size_t>(i)] = reps[static_cast<std::size_t>(to_slot[static_cast<std::size_t>(i)])];
  std::string name = B.name().empty() ? "" : B.name() + "/Soc";
  return {Brace(G, std::move(table), std::move(name)), std::move(projection), std::move(representative)};
}

Brace quotient_by_socle(const Brace& B) { return socle_quotient(B).quotient; }

std::optional<std::array<int, 3>> right_brace_violation(const Brace& B) {
  const AbelianGroup& A = B.additive();
  const int n = B.order();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      const int bc = A.add(b, c);
      for (int a = 0; a < n; ++a)
        if (A.add(B.mul(bc, a), a) != A.add(B.mul(b, a), B.mul(c, a))) return std::array<int, 3>{b, c, a};
    }
  return std::nullopt;
}

// --------------------------------------------------------------- cocycles

VerifyReport verify_cocycle(const CocycleTable& c) {
  const AbelianGroup& A = c.group;
  const auto m = c.domain.size();
  if (c.pi.size() != m) throw BraceError("cocycle table: domain and pi differ in length");
  std::map<Perm, int> where;
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < m; ++i) {
    if (!c.domain[i].fits(A)) throw BraceError("cocycle domain element does not act on " + A.shape_name());
    perms.push_back(c.domain[i].as_permutation(A));
    if (!where.emplace(perms.back(), static_cast<int>(i)).second) return fail("domain has repeated automorphisms", {static_cast<int>(i)});
  }
  std::vector<char> hit(static_cast<std::size_t>(A.order()), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int v = c.pi[i];
    if (v < 0 || v >= A.order()) throw BraceError("cocycle value out of range");
    if (hit[static_cast<std::size_t>(v)]) return fail("pi is not injective", {static_cast<int>(i)});
    hit[static_cast<std::size_t>(v)] = 1;
  }
  if (static_cast<int>(m) != A.order()) return fail("pi is not surjective", {static_cast<int>(m)});
  const auto id = where.find(identity_perm(A.order()));
  if (id == where.end()) return fail("domain lacks the identity", {});
  if (c.pi[static_cast<std::size_t>(id->second)] != 0) return fail("pi(Id) != 0", {id->second});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto prod = where.find(compose_perm(perms[i], perms[j]));
      if (prod == where.end()) return fail("domain not closed under composition", {static_cast<int>(i), static_cast<int>(j)});
      const int rhs = A.add(c.pi[i], perms[i][static_cast<std::size_t>(c.pi[j])]);
      if (c.pi[static_cast<std::size_t>(prod->second)] != rhs)
        return fail("cocycle identity pi(AB) = pi(A) + A pi(B)", {static_cast<int>(i), static_cast<int>(j)});
    }
  return {};
}

Brace brace_from_cocycle(const CocycleTable& c) {
  const VerifyReport r = verify_cocycle(c);
  if (!r.ok()) throw BraceError("invalid cocycle: " + r.violation->to_string());
  std::vector<Perm> lambda(static_cast<std::size_t>(c.group.order()));
  for (std::size_t i = 0; i < c.domain.size(); ++i)
    lambda[static_cast<std::size_t>(c.pi[i])] = c.domain[i].as_permutation(c.group);
  return Brace::from_lambda(c.group, lambda, "cocycle");
}

}  // namespace braces
