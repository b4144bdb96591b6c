#include "braces/extension.hpp"

#include <map>

#include "braces/classify.hpp"

namespace braces {

namespace {

std::vector<Perm> sigma_perms(const ExtensionData& d) {
  std::vector<Perm> out;
  for (const Automorphism& s : d.sigma) {
    if (!s.fits(d.H)) throw ShapeError("sigma value does not act on " + d.H.shape_name());
    out.push_back(s.as_permutation(d.H));
  }
  return out;
}

void check_shapes(const ExtensionData& d) {
  if (static_cast<int>(d.sigma.size()) != d.B.order())
    throw ShapeError("sigma has " + std::to_string(d.sigma.size()) + " values for a brace of order " +
                     std::to_string(d.B.order()));
  if (static_cast<int>(d.h.size()) != d.H.order()) throw ShapeError("h is not defined on every element of H");
  for (int v : d.h)
    if (v < 0 || v >= d.B.order()) throw ShapeError("h value out of range");
}

VerifyReport fail(std::string what, std::vector<int> w) { return {Violation{std::move(what), std::move(w)}}; }

}  // namespace

VerifyReport check_extension_data(const ExtensionData& d) {
  check_shapes(d);
  const std::vector<Perm> s = sigma_perms(d);
  const int nb = d.B.order(), nh = d.H.order();

  std::map<Perm, int> seen;
  for (int g = 0; g < nb; ++g) {
    auto [it, fresh] = seen.emplace(s[static_cast<std::size_t>(g)], g);
    if (!fresh) return fail("sigma is not injective", {it->second, g});
  }
  for (int g = 0; g < nb; ++g)
    for (int g2 = 0; g2 < nb; ++g2)
      if (s[static_cast<std::size_t>(d.B.mul(g, g2))] != compose_perm(s[static_cast<std::size_t>(g)], s[static_cast<std::size_t>(g2)]))
        return fail("sigma is not multiplicative", {g, g2});
  const AbelianGroup& Badd = d.B.additive();
  auto h = [&](int m) { return d.h[static_cast<std::size_t>(m)]; };
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      if (h(d.H.add(a, b)) != Badd.add(h(a), h(b))) return fail("h is not additive", {a, b});
  std::vector<char> hit(static_cast<std::size_t>(nb), 0);
  for (int m = 0; m < nh; ++m) hit[static_cast<std::size_t>(h(m))] = 1;
  for (int g = 0; g < nb; ++g)
    if (!hit[static_cast<std::size_t>(g)]) return fail("h is not surjective", {g});
  for (int g = 0; g < nb; ++g)
    for (int m = 0; m < nh; ++m)
      if (h(s[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)]) != d.B.lambda(g)[static_cast<std::size_t>(h(m))])
        return fail("compatibility h(sigma(g)(m)) = lambda_g(h(m))", {g, m});
  return {};
}

Brace build_extension(const ExtensionData& d) {
  const VerifyReport r = check_extension_data(d);
  if (!r.ok()) throw BraceError("invalid extension datum: " + r.violation->to_string());
  const std::vector<Perm> s = sigma_perms(d);
  const AbelianGroup& H = d.H;
  Brace G = Brace::from_product(H, [&](int x, int y) {
    return H.add(x, s[static_cast<std::size_t>(d.h[static_cast<std::size_t>(x)])][static_cast<std::size_t>(y)]);
  });

  for (int u = 0; u < H.order(); ++u)
    if (G.lambda(u) != s[static_cast<std::size_t>(d.h[static_cast<std::size_t>(u)])])
      throw BraceError("internal: lambda_u differs from sigma(h(u))");
  const SocleInfo soc = socle(G);
  std::vector<int> ker;
  for (int m = 0; m < H.order(); ++m)
    if (d.h[static_cast<std::size_t>(m)] == 0) ker.push_back(m);
  if (ker != soc.elements) throw BraceError("internal: socle differs from ker h");
  const Brace Q = quotient_by_socle(G);
  if (!are_isomorphic(Q, d.B)) throw BraceError("internal: H/Soc(H) is not isomorphic to B");
  return G;
}

std::optional<Automorphism> sigma_h_equivalent(const ExtensionData& d, const ExtensionData& d2) {
  if (!(d.H == d2.H)) return std::nullopt;
  if (!(d.B == d2.B)) return std::nullopt;
  const std::vector<Perm> s = sigma_perms(d), s2 = sigma_perms(d2);
  const AbelianGroup& H = d.H;
  std::optional<Automorphism> found;
  for_each_automorphism(H, [&](const Automorphism& F) {
    const Perm f = F.as_permutation(H);
    for (int m = 0; m < H.order(); ++m) {
      // F o sigma2(h2(m)) == sigma(h(F m)) o F
      const Perm& a = s2[static_cast<std::size_t>(d2.h[static_cast<std::size_t>(m)])];
      const Perm& b = s[static_cast<std::size_t>(d.h[static_cast<std::size_t>(f[static_cast<std::size_t>(m)])])];
      for (int y = 0; y < H.order(); ++y)
        if (f[static_cast<std::size_t>(a[static_cast<std::size_t>(y)])] != b[static_cast<std::size_t>(f[static_cast<std::size_t>(y)])])
          return true;
    }
    found = F;
    return false;
  });
  if (found) {
    const Brace G = build_extension(d), G2 = build_extension(d2);
    if (!is_isomorphism(G2, G, found->as_permutation(H)))
      throw BraceError("internal: sigma/h equivalence does not give a brace isomorphism");
  }
  return found;
}

ExtensionData extension_from_brace(const Brace& G, const std::vector<int>& representatives) {
  const SocleQuotient q = socle_quotient(G);
  const int nq = q.quotient.order();
  if (static_cast<int>(representatives.size()) != nq) throw ShapeError("one representative per coset required");
  ExtensionData d{G.additive(), q.quotient, {}, q.projection};
  for (int c = 0; c < nq; ++c) {
    const int r = representatives[static_cast<std::size_t>(c)];
    if (r < 0 || r >= G.order() || q.projection[static_cast<std::size_t>(r)] != c)
      throw ShapeError("representative " + std::to_string(r) + " is not in coset " + std::to_string(c));
    d.sigma.push_back(Automorphism::from_permutation(G.additive(), G.lambda(r)));
  }
  return d;
}

ExtensionData extension_from_brace(const Brace& G) {
  return extension_from_brace(G, socle_quotient(G).representative);
}

ExtensionData cyclic_extension(const AbelianGroup& H, const Automorphism& A, const std::vector<std::int64_t>& row) {
  const int p = H.p();
  if (static_cast<int>(row.size()) != H.rank()) throw ShapeError("h row has the wrong length");
  const AbelianGroup Zp = AbelianGroup::cyclic(p, 1);
  ExtensionData d{H, Brace::trivial(Zp), {}, {}};
  for (int k = 0; k < p; ++k) d.sigma.push_back(A.pow(static_cast<std::uint64_t>(k)));
  for (int m = 0; m < H.order(); ++m) {
    const Coords c = H.coords(m);
    std::int64_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += row[i] * c[i];
    d.h.push_back(static_cast<int>(mod(v, p)));
  }
  return d;
}

}  // namespace braces
