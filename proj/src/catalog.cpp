#include "braces/catalog.hpp"

#include <sstream>

namespace braces {

namespace {

using I = std::int64_t;
using Kind = GroupName::Kind;

I C2(I y) { return static_cast<I>(binom(static_cast<std::uint64_t>(y), 2)); }

GroupName cyc(int p, unsigned k) { return GroupName::cyclic(p, k); }
GroupName named(Kind k, int p) { return GroupName::of(k, p); }

std::string shape_of(int p, const std::vector<I>& moduli) { return AbelianGroup(p, moduli).shape_name(); }

std::string param_suffix(const std::vector<std::pair<std::string, I>>& params) {
  if (params.empty()) return {};
  std::string s = "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + params[i].first + "=" + std::to_string(params[i].second);
  return s + ")";
}

struct Builder {
  int p;
  int k;  // |G| = p^k
  std::vector<CatalogEntry> out;

  void add(const std::vector<I>& moduli, int socle, const std::string& family,
           std::vector<std::pair<std::string, I>> params, GroupName group, const std::string& locator,
           const std::string& quotient, Formula f) {
    CatalogEntry e;
    e.p = p;
    e.moduli = moduli;
    e.socle_order = socle;
    e.family = family;
    e.params = std::move(params);
    e.claimed_mult_group = group;
    e.printed_mult_group = group;
    e.locator = locator;
    e.quotient_type = quotient;
    e.formula = std::move(f);
    e.id = std::to_string(p) + "^" + std::to_string(k) + "." + shape_of(p, moduli) + ".soc" + std::to_string(socle) +
           "." + family + param_suffix(e.params);
    out.push_back(std::move(e));
  }
  void printed_as(GroupName g) { out.back().printed_mult_group = g; }
};

Formula trivial_formula() {
  return [](const Coords& u, const Coords& v) {
    Coords r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
  };
}

void require_prime(int p, int max_prime) {
  if (!is_prime(p)) throw CatalogError(std::to_string(p) + " is not prime");
  if (p > max_prime)
    throw CatalogError("p = " + std::to_string(p) + " exceeds the configured bound " + std::to_string(max_prime));
}

// ------------------------------------------------------------------ p = 2

void order8(Builder& b) {
  const std::string cyc8 = "Z/8";
  b.add({8}, 2, "f1", {}, named(Kind::ZpxZp2, 2), cyc8 + ", socle 2", "iii",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + 2 * u[0] * v[0]}; });
  const GroupName alpha_group[] = {named(Kind::Q, 2), cyc(2, 3), named(Kind::D4, 2)};
  for (I alpha = 1; alpha <= 3; ++alpha)
    b.add({8}, 4, "f1", {{"alpha", alpha}}, alpha_group[alpha - 1], cyc8 + ", socle 4", "i",
          [alpha](const Coords& u, const Coords& v) { return Coords{u[0] + ipow(1 + 2 * alpha, u[0]) * v[0]}; });
  b.add({8}, 8, "f1", {}, cyc(2, 3), cyc8 + ", socle 8", "1", trivial_formula());

  const std::vector<I> m{2, 4};
  const std::string mixed = "Z/2 x Z/4";
  const GroupName z2z4 = named(Kind::ZpxZp2, 2), d4 = named(Kind::D4, 2), q = named(Kind::Q, 2),
                  e3 = named(Kind::Elementary3, 2);
  // coordinates (u, w) stand for (y, z + 2x) with z = w mod 2, x = (w - z) / 2
  b.add(m, 1, "f1", {}, d4, mixed + ", socle 1", "", [](const Coords& s, const Coords& t) {
    const I y1 = s[0], z1 = s[1] % 2, x1 = (s[1] - z1) / 2;
    const I y2 = t[0], z2 = t[1] % 2, x2 = (t[1] - z2) / 2;
    return Coords{y1 + y2 + (x1 + y1 + z1 + y1 * z1) * z2,
                  z1 + 2 * x1 + 2 * z1 * y2 + 2 * (y1 + x1 * z1) * z2 + z2 + 2 * x2};
  });
  const std::string s2 = mixed + ", socle 2";
  b.add(m, 2, "f1", {}, z2z4, s2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[0] * v[0] + 2 * u[1] * v[1]};
  });
  b.add(m, 2, "f2", {}, d4, s2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + 2 * (u[0] + u[1]) * v[0] + 2 * u[1] * v[1]};
  });
  b.add(m, 2, "f3", {}, z2z4, s2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[1] * v[0] + 2 * u[0] * v[1]};
  });
  b.add(m, 2, "f4", {}, e3, s2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[1] * v[0] + 2 * (u[0] + u[1]) * v[1]};
  });
  b.add(m, 2, "f5", {}, z2z4, s2, "v", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1] + 2 * u[1] * v[0] + 2 * u[0] * v[1]};
  });
  b.add(m, 2, "f6", {}, d4, s2, "iii", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + v[1] * static_cast<I>(tri_sum(static_cast<std::uint64_t>(u[1]))),
                  u[1] + v[1] + 2 * u[1] * v[1]};
  });
  const std::string s4 = mixed + ", socle 4";
  b.add(m, 4, "f1", {}, d4, s4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[0] * v[1]}; });
  b.add(m, 4, "f2", {}, e3, s4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[1] * v[1]}; });
  b.add(m, 4, "f3", {}, d4, s4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[1] * v[0]}; });
  b.add(m, 4, "f4", {}, z2z4, s4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + 2 * u[0] * v[0]}; });
  b.add(m, 4, "f5", {}, q, s4, "i", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + 2 * (u[0] + u[1]) * v[0]};
  });
  b.add(m, 4, "f6", {}, z2z4, s4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1]}; });
  b.add(m, 8, "f1", {}, z2z4, mixed + ", socle 8", "1", trivial_formula());

  const std::vector<I> e{2, 2, 2};
  const std::string el = "(Z/2)^3";
  b.add(e, 1, "f1", {}, d4, el + ", socle 1", "", [](const Coords& u, const Coords& v) {
    const I x1 = u[0], y1 = u[1], z1 = u[2], x2 = v[0], y2 = v[1], z2 = v[2];
    return Coords{x1 + x2 + z1 * y2 + x1 * z2 + y1 * z2 + x1 * z1 * z2, y1 + y2 + z1 * z2 + x1 * z2 + y1 * z1 * z2,
                  z1 + z2};
  });
  const std::string e2 = el + ", socle 2";
  b.add(e, 2, "f1", {}, e3, e2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[2] * v[1] + u[1] * v[2], u[1] + v[1], u[2] + v[2]};
  });
  b.add(e, 2, "f2", {}, z2z4, e2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[1] * v[1] + u[2] * v[2], u[1] + v[1], u[2] + v[2]};
  });
  b.add(e, 2, "f3", {}, q, e2, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + (u[1] + u[2]) * v[1] + u[2] * v[2], u[1] + v[1], u[2] + v[2]};
  });
  b.add(e, 2, "f4", {}, z2z4, e2, "v", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[2] * v[1] + u[1] * v[2], u[1] + v[1] + u[2] * v[2], u[2] + v[2]};
  });
  const std::string e4 = el + ", socle 4";
  b.add(e, 4, "f1", {}, z2z4, e4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1], u[2] + v[2]}; });
  b.add(e, 4, "f2", {}, d4, e4, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[2] * v[1], u[1] + v[1], u[2] + v[2]}; });
  b.add(e, 8, "f1", {}, e3, el + ", socle 8", "1", trivial_formula());
}

// -------------------------------------------------------------- p odd

void order_p3_odd(Builder& b) {
  const int p = b.p;
  const I P = p, P2 = I{p} * p, P3 = P2 * p;
  const I eps = epsilon(p);
  const GroupName zc = cyc(p, 3), zz = named(Kind::ZpxZp2, p), m3 = named(Kind::M3p, p), mp = named(Kind::Mp, p),
                  e3 = named(Kind::Elementary3, p);

  const std::string cyc_loc = "Z/p^3, socle ";
  b.add({P3}, p, "f1", {}, zc, cyc_loc + "p", "iii",
        [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + P * u[0] * v[0]}; });
  b.add({P3}, static_cast<int>(P2), "f1", {}, zc, cyc_loc + "p^2", "i",
        [P2](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + P2 * u[0] * v[0]}; });
  b.add({P3}, static_cast<int>(P3), "f1", {}, zc, cyc_loc + "p^3", "1", trivial_formula());

  const std::vector<I> m{P, P2};
  const std::string ms = "Z/p x Z/p^2, socle p";
  for (I lam = 0; lam <= (P - 1) / 2; ++lam)
    b.add(m, p, "f1", {{"lambda", lam}}, lam == 0 ? zz : m3, ms, "iv", [P, eps, lam](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0], u[1] + v[1] + P * (eps * u[0] + lam * u[1]) * v[0] + P * u[1] * v[1]};
    });
  for (I lam = 0; lam <= (P - 1) / 2; ++lam)
    b.add(m, p, "f2", {{"lambda", lam}}, lam == 0 ? zz : m3, ms, "iv", [P, lam](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0], u[1] + v[1] + P * (u[0] + lam * u[1]) * v[0] + P * u[1] * v[1]};
    });
  for (I lam = 1; lam <= P - 1; ++lam)
    b.add(m, p, "f3", {{"lambda", lam}}, lam == 1 ? zz : m3, ms, "iv", [P, lam](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0], u[1] + v[1] + P * lam * u[1] * v[0] + P * u[0] * v[1]};
    });
  b.add(m, p, "f4", {}, m3, ms, "iv", [P](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] - P * u[1] * v[0] + P * (u[0] + u[1]) * v[1]};
  });
  for (I a = 0; a <= P - 1; ++a) {
    GroupName g = a == 1 ? zz : m3;
    if (p == 3) g = a == 1 ? zz : a == 2 ? named(Kind::Mp, 3) : m3;
    b.add(m, p, "f5", {{"a", a}}, g, ms, "v", [P, a](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + u[1] * v[1],
                    u[1] + v[1] + P * a * u[1] * v[0] + P * u[0] * v[1] + P * (a - 1) * C2(u[1]) * v[1]};
    });
  }
  for (I a = 0; a <= P - 1; ++a) {
    GroupName g = a == eps ? zz : m3;
    if (p == 3) g = a == 2 ? e3 : m3;
    b.add(m, p, "f6", {{"a", a}}, g, ms, "v", [P, eps, a](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + u[1] * v[1],
                    u[1] + v[1] + P * a * u[1] * v[0] + P * eps * u[0] * v[1] + P * (a - eps) * C2(u[1]) * v[1]};
    });
  }
  const std::string ms2 = "Z/p x Z/p^2, socle p^2";
  const int s2 = static_cast<int>(P2);
  b.add(m, s2, "f1", {}, m3, ms2, "i",
        [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + P * u[0] * v[1]}; });
  b.add(m, s2, "f2", {}, zz, ms2, "i",
        [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + P * u[1] * v[1]}; });
  b.add(m, s2, "f3", {}, m3, ms2, "i",
        [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + P * u[1] * v[0]}; });
  b.add(m, s2, "f4", {}, zz, ms2, "i",
        [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0], u[1] + v[1] + P * u[0] * v[0]}; });
  b.add(m, s2, "f5", {}, m3, ms2, "i", [P](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0], u[1] + v[1] + P * (u[0] + u[1]) * v[0]};
  });
  b.add(m, s2, "f6", {}, zz, ms2, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1]}; });
  b.add(m, s2, "f7", {}, m3, ms2, "i", [P](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1] + P * u[1] * v[0] + P * C2(u[1]) * v[1]};
  });
  // at p = 3 (eps = 2) every element has order 3
  b.add(m, s2, "f8", {}, p == 3 ? named(Kind::Mp, 3) : m3, ms2, "i", [P, eps](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1] + P * eps * u[1] * v[0] + P * eps * C2(u[1]) * v[1]};
  });
  if (p == 3) b.printed_as(m3);
  b.add(m, static_cast<int>(P3), "f1", {}, zz, "Z/p x Z/p^2, socle p^3", "1", trivial_formula());
  b.printed_as(m3);

  const std::vector<I> e{P, P, P};
  const std::string es = "(Z/p)^3, socle p";
  b.add(e, p, "f1", {}, mp, es, "iv", [](const Coords& u, const Coords& v) {
    return Coords{u[0] + v[0] - u[2] * v[1] + u[1] * v[2], u[1] + v[1], u[2] + v[2]};
  });
  for (I lam = 0; lam <= (P - 1) / 2; ++lam)
    b.add(e, p, "f2", {{"lambda", lam}}, lam == 0 ? e3 : mp, es, "iv", [lam](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + (u[1] + lam * u[2]) * v[1] + u[2] * v[2], u[1] + v[1], u[2] + v[2]};
    });
  for (I lam = 0; lam <= (P - 1) / 2; ++lam)
    b.add(e, p, "f3", {{"lambda", lam}}, lam == 0 ? e3 : mp, es, "iv", [eps, lam](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + (eps * u[1] + lam * u[2]) * v[1] + u[2] * v[2], u[1] + v[1], u[2] + v[2]};
    });
  for (I c = 0; c <= P - 1; ++c) {
    GroupName g = c == 1 ? e3 : mp;
    if (p == 3) g = c == 0 ? named(Kind::Mp, 3) : c == 1 ? named(Kind::ZpxZp2, 3) : named(Kind::M3p, 3);
    b.add(e, p, "f4", {{"c", c}}, g, es, "v", [c](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + c * u[2] * v[1] + u[1] * v[2] + (c - 1) * C2(u[2]) * v[2], u[1] + v[1] + u[2] * v[2],
                    u[2] + v[2]};
    });
  }
  const std::string es2 = "(Z/p)^3, socle p^2";
  b.add(e, s2, "f1", {}, e3, es2, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1], u[2] + v[2]}; });
  b.add(e, s2, "f2", {}, mp, es2, "i",
        [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[2] * v[1], u[1] + v[1], u[2] + v[2]}; });
  if (jordan3_order(p) == static_cast<std::uint64_t>(p))
    b.add(e, s2, "f3", {}, p == 3 ? named(Kind::M3p, 3) : mp, es2, "i", [](const Coords& u, const Coords& v) {
      return Coords{u[0] + v[0] + u[2] * v[1] + C2(u[2]) * v[2], u[1] + v[1] + u[2] * v[2], u[2] + v[2]};
    });
  b.add(e, static_cast<int>(P3), "f1", {}, e3, "(Z/p)^3, socle p^3", "1", trivial_formula());
}

}  // namespace

std::string CatalogEntry::params_string() const {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + params[i].first + "=" + std::to_string(params[i].second);
  return s;
}

std::int64_t epsilon(int p) {
  if (p == 2) throw CatalogError("epsilon is only defined for odd p");
  if (!is_prime(p)) throw CatalogError(std::to_string(p) + " is not prime");
  std::vector<char> square(static_cast<std::size_t>(p), 0);
  for (I x = 0; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = 1;
  for (I e = 1; e < p; ++e)
    if (!square[static_cast<std::size_t>(e)]) return e;
  throw CatalogError("no quadratic non-residue");
}

std::uint64_t jordan3_order(int p) {
  const GLMatrix J = GLMatrix::from_rows(p, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const GLMatrix id = GLMatrix::identity(p, 3);
  GLMatrix X = J;
  std::uint64_t k = 1;
  while (!(X == id)) {
    X = X * J;
    ++k;
  }
  return k;
}

std::vector<CatalogEntry> small_catalog_entries(int p, int max_prime) {
  require_prime(p, max_prime);
  const I P = p, P2 = I{p} * p;
  std::vector<CatalogEntry> out;
  Builder one{p, 1, {}};
  one.add({P}, p, "i", {}, cyc(p, 1), "Z/p", "1", trivial_formula());
  Builder two{p, 2, {}};
  two.add({P2}, static_cast<int>(P2), "ii", {}, cyc(p, 2), "Z/p^2, socle p^2", "1", trivial_formula());
  two.add({P2}, p, "iii", {}, p == 2 ? named(Kind::ZpxZp, 2) : cyc(p, 2), "Z/p^2, socle p", "i",
          [P](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + P * u[0] * v[0]}; });
  two.add({P, P}, static_cast<int>(P2), "iv", {}, named(Kind::ZpxZp, p), "Z/p x Z/p, socle p^2", "1", trivial_formula());
  two.add({P, P}, p, "v", {}, p == 2 ? cyc(2, 2) : named(Kind::ZpxZp, p), "Z/p x Z/p, socle p", "i",
          [](const Coords& u, const Coords& v) { return Coords{u[0] + v[0] + u[1] * v[1], u[1] + v[1]}; });
  out = std::move(one.out);
  for (auto& e : two.out) out.push_back(std::move(e));
  return out;
}

std::vector<CatalogEntry> catalog_entries(int p, int max_prime) {
  require_prime(p, max_prime);
  Builder b{p, 3, {}};
  if (p == 2)
    order8(b);
  else
    order_p3_odd(b);
  return std::move(b.out);
}

std::vector<std::string> annotation_errata(int p) {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries(p, p))
    if (!(e.printed_mult_group == e.claimed_mult_group)) ids.push_back(e.id);
  return ids;
}

Brace build_entry(const CatalogEntry& e) {
  const AbelianGroup A = e.additive();
  auto reduce = [&](Coords c) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i], A.moduli()[i]);
    return A.index(c);
  };
  try {
    return Brace::from_product(
        A, [&](int a, int b) { return reduce(e.formula(A.coords(a), A.coords(b))); }, e.id);
  } catch (const BraceError& err) {
    throw CatalogError(e.id + ": " + err.what());
  }
}

std::vector<CatalogBrace> small_catalog(int p, int max_prime) {
  std::vector<CatalogBrace> out;
  for (auto& e : small_catalog_entries(p, max_prime)) {
    Brace b = build_entry(e);
    out.push_back({std::move(e), std::move(b)});
  }
  return out;
}

std::vector<CatalogBrace> catalog_p3(int p, int max_prime) {
  std::vector<CatalogBrace> out;
  for (auto& e : catalog_entries(p, max_prime)) {
    Brace b = build_entry(e);
    out.push_back({std::move(e), std::move(b)});
  }
  if (p == 2) {
    // the trivial-socle closed forms must agree with the cocycle constructions
    for (const auto& cb : out) {
      if (cb.entry.socle_order != 1) continue;
      const Brace alt = brace_from_cocycle(cb.entry.moduli.size() == 3 ? t2_cocycle(1) : m2_listed_cocycle());
      if (alt.table() != cb.brace.table())
        throw CatalogError(cb.entry.id + ": closed form differs from the cocycle construction");
    }
  }
  return out;
}

std::string small_entry_id(int p, const std::string& type) {
  for (const auto& e : small_catalog_entries(p, p))
    if (e.family == type) return e.id;
  throw CatalogError("unknown small brace type '" + type + "'");
}

CatalogEntry find_entry(const std::string& id, int max_prime) {
  const auto caret = id.find('^');
  if (caret == std::string::npos) throw CatalogError("malformed entry id '" + id + "'");
  int p = 0;
  try {
    p = std::stoi(id.substr(0, caret));
  } catch (const std::logic_error&) {
    throw CatalogError("malformed entry id '" + id + "'");
  }
  const std::string rest = id.substr(caret + 1);
  std::vector<CatalogEntry> pool = rest.rfind("3.", 0) == 0 ? catalog_entries(p, max_prime)
                                                            : small_catalog_entries(p, max_prime);
  for (auto& e : pool)
    if (e.id == id) return std::move(e);
  throw CatalogError("unknown entry id '" + id + "'");
}

GroupElement entry_multiply(const CatalogEntry& e, const GroupElement& u, const GroupElement& v) {
  const AbelianGroup A = e.additive();
  Coords r = e.formula(u.coords, v.coords);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(r[i], A.moduli()[i]);
  return A.element(r);
}

// ------------------------------------------------------------- cocycles

CocycleTable t2_cocycle(int case_no) {
  static const int cases[4][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
  if (case_no < 1 || case_no > 4) throw CatalogError("case must be 1..4");
  const int x0 = cases[case_no - 1][0], bb = cases[case_no - 1][1], cp = cases[case_no - 1][2];
  CocycleTable c{AbelianGroup::elementary(2, 3), {}, {}};
  for (const GLMatrix& M : sylow_Tp(2)) {
    const I n = M.at(0, 1), x = M.at(0, 2), y = M.at(1, 2);
    const Coords v{mod(cp * x + y + x0 * n + x * n, 2), mod(bb * y + x + n * y, 2), n};
    c.domain.emplace_back(M);
    c.pi.push_back(c.group.index(v));
  }
  return c;
}

CocycleTable m2_listed_cocycle() {
  // vector (X, Y) -> matrix (1 c; 2a t)
  struct Row {
    I X, Y, c, a, t;
  };
  static const Row rows[] = {{0, 0, 0, 0, 1}, {1, 3, 0, 1, 1}, {0, 1, 1, 1, 1}, {0, 2, 1, 0, 1},
                             {1, 2, 0, 0, 3}, {1, 0, 1, 0, 3}, {1, 1, 1, 1, 3}, {0, 3, 0, 1, 3}};
  CocycleTable c{AbelianGroup::mixed(2), {}, {}};
  for (const Row& r : rows) {
    c.domain.emplace_back(MixedMatrix(2, 1, r.c, r.a, r.t));
    c.pi.push_back(c.group.index({r.X, r.Y}));
  }
  return c;
}

CocycleTable m2_printed_closed_form() {
  CocycleTable c{AbelianGroup::mixed(2), {}, {}};
  for (const MixedMatrix& M : sylow_Mp(2)) {
    const I cc = M.y, a = M.z, b = (M.t - 1) / 2;
    const I sum = static_cast<I>(tri_sum(static_cast<std::uint64_t>(a)));
    c.domain.emplace_back(M);
    c.pi.push_back(c.group.index({mod(a + b + cc + a * cc, 2), mod(a + 2 * (a + b + cc + a * b + sum), 4)}));
  }
  return c;
}

}  // namespace braces
