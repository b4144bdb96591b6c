#include "braces/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braces {

namespace {

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

AbelianGroup::AbelianGroup(int p, std::vector<std::int64_t> moduli) : p_(p), moduli_(sorted(std::move(moduli))) {
  if (!is_prime(p)) throw ShapeError("not a prime: " + std::to_string(p));
  const std::int64_t p2 = ipow(p, 2), p3 = ipow(p, 3);
  const auto& m = moduli_;
  if (m == std::vector<std::int64_t>{1} || m == std::vector<std::int64_t>{p} || m == std::vector<std::int64_t>{p2} || m == std::vector<std::int64_t>{p3}) {
    kind_ = ShapeKind::Cyclic;
  } else if (m == std::vector<std::int64_t>{p, p} || m == std::vector<std::int64_t>{p, p, p}) {
    kind_ = ShapeKind::Elementary;
  } else if (m == std::vector<std::int64_t>{p, p2}) {
    kind_ = ShapeKind::Mixed;
  } else {
    std::ostringstream os;
    os << "unsupported additive shape [";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "] for p=" << p;
    throw ShapeError(os.str());
  }
  order_ = static_cast<int>(std::accumulate(m.begin(), m.end(), std::int64_t{1}, std::multiplies<>()));

  coords_.resize(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) {
    Coords c(m.size());
    int rest = i;
    for (int k = rank() - 1; k >= 0; --k) {
      c[static_cast<std::size_t>(k)] = rest % m[static_cast<std::size_t>(k)];
      rest /= static_cast<int>(m[static_cast<std::size_t>(k)]);
    }
    coords_[static_cast<std::size_t>(i)] = std::move(c);
  }
  add_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    const Coords& ca = coords_[static_cast<std::size_t>(a)];
    Coords n(ca.size());
    for (std::size_t k = 0; k < ca.size(); ++k) n[k] = mod(-ca[k], m[k]);
    neg_[static_cast<std::size_t>(a)] = index(n);
    for (int b = 0; b < order_; ++b) {
      const Coords& cb = coords_[static_cast<std::size_t>(b)];
      Coords s(ca.size());
      for (std::size_t k = 0; k < ca.size(); ++k) s[k] = (ca[k] + cb[k]) % m[k];
      add_[static_cast<std::size_t>(a) * order_ + b] = index(s);
    }
  }
}

AbelianGroup AbelianGroup::cyclic(int p, unsigned k) { return {p, {ipow(p, k)}}; }

AbelianGroup AbelianGroup::elementary(int p, unsigned rank) { return {p, std::vector<std::int64_t>(rank, p)}; }

AbelianGroup AbelianGroup::mixed(int p) { return {p, {p, ipow(p, 2)}}; }

AbelianGroup AbelianGroup::parse(int p, const std::string& shape_in) {
  std::string shape = shape_in;
  if (shape == "zp_p2") shape = "zpxzp2";
  if (shape == "zp_p") shape = "zpxzp";
  if (shape == "zp_p_p") shape = "zpxzpxzp";
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  while (pos <= shape.size()) {
    const std::size_t next = shape.find('x', pos);
    const std::string tok = shape.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.size() < 2 || tok[0] != 'z') throw ShapeError("cannot parse shape '" + shape_in + "'");
    const std::string body = tok.substr(1);
    if (body == "p") {
      moduli.push_back(p);
    } else if (body == "p2") {
      moduli.push_back(ipow(p, 2));
    } else if (body == "p3") {
      moduli.push_back(ipow(p, 3));
    } else {
      if (body.find_first_not_of("0123456789") != std::string::npos)
        throw ShapeError("cannot parse shape '" + shape_in + "'");
      moduli.push_back(std::stoll(body));
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return {p, moduli};
}

std::string AbelianGroup::shape_name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) s += (i ? "xz" : "z") + std::to_string(moduli_[i]);
  return s;
}

std::string AbelianGroup::generic_shape_name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    s += i ? "xzp" : "zp";
    if (moduli_[i] == ipow(p_, 2)) s += "2";
    if (moduli_[i] == ipow(p_, 3)) s += "3";
  }
  return s;
}

int AbelianGroup::index(const Coords& c) const {
  if (c.size() != moduli_.size()) throw ShapeError("coordinate count does not match group rank");
  std::int64_t idx = 0;
  for (std::size_t k = 0; k < c.size(); ++k) idx = idx * moduli_[k] + mod(c[k], moduli_[k]);
  return static_cast<int>(idx);
}

GroupElement AbelianGroup::element(const Coords& c) const { return element(index(c)); }

int AbelianGroup::scale(int a, std::int64_t k) const {
  Coords c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i] * mod(k, moduli_[i]), moduli_[i]);
  return index(c);
}

int AbelianGroup::element_order(int a) const {
  int n = 1;
  for (int x = a; x != 0; x = add(x, a)) ++n;
  return n;
}

std::vector<int> AbelianGroup::basis() const {
  std::vector<int> out;
  for (int k = 0; k < rank(); ++k) {
    Coords c(moduli_.size(), 0);
    c[static_cast<std::size_t>(k)] = 1;
    out.push_back(index(c));
  }
  return out;
}

// ---------------------------------------------------------------- GLMatrix

GLMatrix GLMatrix::identity(int p, int n) {
  GLMatrix m;
  m.p = p;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

GLMatrix GLMatrix::from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows) {
  GLMatrix m;
  m.p = p;
  m.n = static_cast<int>(rows.size());
  if (m.n < 1 || m.n > 3) throw ShapeError("matrix size must be 1..3");
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n) throw ShapeError("matrix must be square");
    for (int j = 0; j < m.n; ++j) m.at(i, j) = mod(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
  }
  return m;
}

std::int64_t GLMatrix::det() const {
  switch (n) {
    case 1:
      return mod(at(0, 0), p);
    case 2:
      return mod(at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0), p);
    default:
      return mod(at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                     at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                     at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0)),
                 p);
  }
}

GLMatrix GLMatrix::operator*(const GLMatrix& o) const {
  if (o.n != n || o.p != p) throw ShapeError("matrix shape mismatch");
  GLMatrix r;
  r.p = p;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = mod(s, p);
    }
  return r;
}

GLMatrix GLMatrix::pow(std::uint64_t k) const {
  GLMatrix base = *this, r = identity(p, n);
  while (k > 0) {
    if (k & 1U) r = r * base;
    base = base * base;
    k >>= 1U;
  }
  return r;
}

GLMatrix GLMatrix::inverse() const {
  // Gauss-Jordan on [M | I]
  GLMatrix m = *this, inv = identity(p, n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) throw ArithmeticError("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(col, j), m.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    const std::int64_t s = inverse_mod(m.at(col, col), p);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = mod(m.at(col, j) * s, p);
      inv.at(col, j) = mod(inv.at(col, j) * s, p);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      const std::int64_t f = m.at(i, col);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = mod(m.at(i, j) - f * m.at(col, j), p);
        inv.at(i, j) = mod(inv.at(i, j) - f * inv.at(col, j), p);
      }
    }
  }
  return inv;
}

Coords GLMatrix::apply(const Coords& v) const {
  if (static_cast<int>(v.size()) != n) throw ShapeError("vector length does not match matrix");
  Coords r(v.size());
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = mod(s, p);
  }
  return r;
}

// ------------------------------------------------------------- MixedMatrix

MixedMatrix::MixedMatrix(int p_, std::int64_t x_, std::int64_t y_, std::int64_t z_, std::int64_t t_)
    : p(p_), x(mod(x_, p_)), y(mod(y_, p_)), z(mod(z_, p_)), t(mod(t_, static_cast<std::int64_t>(p_) * p_)) {}

MixedMatrix mixed_mul(const MixedMatrix& A, const MixedMatrix& B) {
  if (A.p != B.p) throw ShapeError("mixed matrices over different primes");
  const std::int64_t p = A.p;
  // z entries stand for p*z, so the lower-left entry p*(za + tc) reduces to za + tc mod p
  return {A.p, A.x * B.x, A.x * B.y + A.y * B.t, A.z * B.x + A.t * B.z, A.t * B.t + p * A.z * B.y};
}

MixedMatrix mixed_pow(const MixedMatrix& A, std::uint64_t n) {
  if (!A.in_sylow()) throw ArithmeticError("mixed_pow expects a matrix of the form (1, c; p*a, 1+p*b)");
  const std::int64_t p = A.p, p2 = p * p;
  const std::int64_t c = A.y, a = A.z, b = (A.t - 1) / p;
  const auto nn = static_cast<std::int64_t>(n % static_cast<std::uint64_t>(p2));
  const auto cn2 = static_cast<std::int64_t>(binom(n, 2) % static_cast<std::uint64_t>(p2));
  return {A.p, 1, nn * c, nn * a, mod(1 + p * nn * b + p * mod(cn2 * a % p2 * c, p2), p2)};
}

MixedMatrix MixedMatrix::inverse() const {
  if (!invertible()) throw ArithmeticError("singular mixed matrix");
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  const std::int64_t xi = inverse_mod(x, p), ti = inverse_mod(t, p2);
  const std::int64_t yi = mod(-xi * y % p * (ti % p), p);
  const std::int64_t zi = mod(-(ti % p) * z % p * xi, p);
  const std::int64_t tt = mod(ti * mod(1 - static_cast<std::int64_t>(p) * z * yi, p2), p2);
  return {p, xi, yi, zi, tt};
}

Coords MixedMatrix::apply(const Coords& v) const {
  if (v.size() != 2) throw ShapeError("mixed matrix acts on Z/p x Z/p^2");
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  return {mod(x * v[0] + y * v[1], p), mod(static_cast<std::int64_t>(p) * z * v[0] + t * v[1], p2)};
}

// ------------------------------------------------------------ Automorphism

Automorphism::Automorphism(GLMatrix m) : payload_(m) {
  if (m.det() == 0) throw ArithmeticError("singular matrix is not an automorphism");
}

Automorphism::Automorphism(MixedMatrix m) : payload_(m) {
  if (!m.invertible()) throw ArithmeticError("mixed matrix with x*t = 0 mod p is not an automorphism");
}

Automorphism::Automorphism(UnitScalar u) : payload_(UnitScalar{u.modulus, mod(u.value, u.modulus)}) {
  if (std::gcd(std::get<UnitScalar>(payload_).value, u.modulus) != 1)
    throw ArithmeticError("scalar is not a unit");
}

Automorphism Automorphism::identity(const AbelianGroup& G) {
  switch (G.kind()) {
    case ShapeKind::Cyclic:
      return Automorphism(UnitScalar{G.moduli()[0], 1});
    case ShapeKind::Elementary:
      return Automorphism(GLMatrix::identity(G.p(), G.rank()));
    case ShapeKind::Mixed:
      return Automorphism(MixedMatrix::identity(G.p()));
  }
  throw ShapeError("unreachable");
}

bool Automorphism::fits(const AbelianGroup& G) const {
  if (const auto* m = std::get_if<GLMatrix>(&payload_))
    return G.kind() == ShapeKind::Elementary && m->p == G.p() && m->n == G.rank();
  if (const auto* m = std::get_if<MixedMatrix>(&payload_)) return G.kind() == ShapeKind::Mixed && m->p == G.p();
  const auto& u = std::get<UnitScalar>(payload_);
  return G.kind() == ShapeKind::Cyclic && u.modulus == G.moduli()[0];
}

Automorphism Automorphism::from_permutation(const AbelianGroup& G, const Perm& perm) {
  if (static_cast<int>(perm.size()) != G.order()) throw ShapeError("permutation size does not match group order");
  std::optional<Automorphism> f;
  try {
    switch (G.kind()) {
      case ShapeKind::Cyclic:
        f.emplace(UnitScalar{G.moduli()[0], G.order() == 1 ? 0 : G.coords(perm[static_cast<std::size_t>(G.index({1}))])[0]});
        break;
      case ShapeKind::Elementary: {
        GLMatrix m = GLMatrix::identity(G.p(), G.rank());
        const auto basis = G.basis();
        for (int j = 0; j < G.rank(); ++j) {
          const Coords col = G.coords(perm[static_cast<std::size_t>(basis[static_cast<std::size_t>(j)])]);
          for (int i = 0; i < G.rank(); ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        f.emplace(m);
        break;
      }
      case ShapeKind::Mixed: {
        const Coords e1 = G.coords(perm[static_cast<std::size_t>(G.index({1, 0}))]);
        const Coords e2 = G.coords(perm[static_cast<std::size_t>(G.index({0, 1}))]);
        if (e1[1] % G.p() != 0) throw ShapeError("image of (1,0) must have order p");
        f.emplace(MixedMatrix(G.p(), e1[0], e2[0], e1[1] / G.p(), e2[1]));
        break;
      }
    }
  } catch (const ArithmeticError&) {
    throw ShapeError("permutation is not an additive automorphism");
  }
  if (f->as_permutation(G) != perm) throw ShapeError("permutation is not an additive automorphism");
  return *f;
}

Coords Automorphism::apply(const Coords& v) const {
  if (const auto* m = std::get_if<GLMatrix>(&payload_)) return m->apply(v);
  if (const auto* m = std::get_if<MixedMatrix>(&payload_)) return m->apply(v);
  const auto& u = std::get<UnitScalar>(payload_);
  if (v.size() != 1) throw ShapeError("unit scalar acts on a cyclic group");
  return {mod(u.value * v[0], u.modulus)};
}

GroupElement Automorphism::apply(const AbelianGroup& G, const GroupElement& v) const {
  if (!fits(G)) throw ShapeError("automorphism does not act on " + G.shape_name());
  return G.element(apply(v.coords));
}

int Automorphism::apply_index(const AbelianGroup& G, int index) const {
  if (!fits(G)) throw ShapeError("automorphism does not act on " + G.shape_name());
  return G.index(apply(G.coords(index)));
}

Automorphism Automorphism::compose(const Automorphism& g) const {
  return std::visit(
      [&](const auto& lhs) -> Automorphism {
        using T = std::decay_t<decltype(lhs)>;
        const auto* rhs = std::get_if<T>(&g.payload_);
        if (rhs == nullptr) throw ShapeError("cannot compose automorphisms of different groups");
        if constexpr (std::is_same_v<T, GLMatrix>) {
          return Automorphism(lhs * *rhs);
        } else if constexpr (std::is_same_v<T, MixedMatrix>) {
          return Automorphism(mixed_mul(lhs, *rhs));
        } else {
          if (lhs.modulus != rhs->modulus) throw ShapeError("unit scalars over different moduli");
          return Automorphism(UnitScalar{lhs.modulus, mod(lhs.value * rhs->value, lhs.modulus)});
        }
      },
      payload_);
}

Automorphism Automorphism::inverse() const {
  if (const auto* m = std::get_if<GLMatrix>(&payload_)) return Automorphism(m->inverse());
  if (const auto* m = std::get_if<MixedMatrix>(&payload_)) return Automorphism(m->inverse());
  const auto& u = std::get<UnitScalar>(payload_);
  return Automorphism(UnitScalar{u.modulus, inverse_mod(u.value, u.modulus)});
}

Automorphism Automorphism::pow(std::uint64_t k) const {
  Automorphism base = *this;
  std::optional<Automorphism> r;
  while (k > 0) {
    if (k & 1U) r = r ? r->compose(base) : base;
    base = base.compose(base);
    k >>= 1U;
  }
  if (r) return *r;
  return compose(inverse());
}

Perm Automorphism::as_permutation(const AbelianGroup& G) const {
  if (!fits(G)) throw ShapeError("automorphism does not act on " + G.shape_name());
  Perm perm(static_cast<std::size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) perm[static_cast<std::size_t>(i)] = apply_index(G, i);
  return perm;
}

bool Automorphism::is_identity() const {
  if (const auto* m = std::get_if<GLMatrix>(&payload_)) return *m == GLMatrix::identity(m->p, m->n);
  if (const auto* m = std::get_if<MixedMatrix>(&payload_)) return *m == MixedMatrix::identity(m->p);
  const auto& u = std::get<UnitScalar>(payload_);
  return u.value == mod(1, u.modulus);
}

std::string Automorphism::to_string() const {
  std::ostringstream os;
  if (const auto* m = std::get_if<GLMatrix>(&payload_)) {
    os << "[";
    for (int i = 0; i < m->n; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < m->n; ++j) os << (j ? " " : "") << m->at(i, j);
    }
    os << "] mod " << m->p;
  } else if (const auto* mm = std::get_if<MixedMatrix>(&payload_)) {
    os << "(" << mm->x << " " << mm->y << "; " << mm->p << "*" << mm->z << " " << mm->t << ")";
  } else {
    const auto& u = std::get<UnitScalar>(payload_);
    os << u.value << " mod " << u.modulus;
  }
  return os.str();
}

// ---------------------------------------------------------- enumeration

std::uint64_t automorphism_count(const AbelianGroup& G) {
  const auto p = static_cast<std::uint64_t>(G.p());
  switch (G.kind()) {
    case ShapeKind::Cyclic: {
      const auto m = static_cast<std::uint64_t>(G.moduli()[0]);
      return m == 1 ? 1 : m / p * (p - 1);
    }
    case ShapeKind::Elementary: {
      const auto n = static_cast<unsigned>(G.rank());
      const std::uint64_t q = ipow(static_cast<std::int64_t>(p), n);
      std::uint64_t r = 1;
      for (unsigned i = 0; i < n; ++i) r *= q - ipow(static_cast<std::int64_t>(p), i);
      return r;
    }
    case ShapeKind::Mixed:
      return p * p * p * (p - 1) * (p - 1);
  }
  return 0;
}

void for_each_automorphism(const AbelianGroup& G, const std::function<bool(const Automorphism&)>& visit) {
  const int p = G.p();
  switch (G.kind()) {
    case ShapeKind::Cyclic: {
      const std::int64_t m = G.moduli()[0];
      if (m == 1) {
        visit(Automorphism(UnitScalar{1, 0}));
        return;
      }
      for (std::int64_t u = 1; u < m; ++u)
        if (u % p != 0 && !visit(Automorphism(UnitScalar{m, u}))) return;
      return;
    }
    case ShapeKind::Elementary: {
      const int n = G.rank(), cells = n * n;
      GLMatrix m = GLMatrix::identity(p, n);
      m.a.fill(0);
      const std::int64_t total = ipow(p, static_cast<unsigned>(cells));
      for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t rest = code;
        for (int c = cells - 1; c >= 0; --c) {
          m.a[static_cast<std::size_t>(c)] = rest % p;
          rest /= p;
        }
        if (m.det() != 0 && !visit(Automorphism(m))) return;
      }
      return;
    }
    case ShapeKind::Mixed: {
      const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
      for (std::int64_t x = 1; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
          for (std::int64_t z = 0; z < p; ++z)
            for (std::int64_t t = 0; t < p2; ++t)
              if (t % p != 0 && !visit(Automorphism(MixedMatrix(p, x, y, z, t)))) return;
      return;
    }
  }
}

std::vector<Automorphism> automorphism_group(const AbelianGroup& G) {
  std::vector<Automorphism> out;
  out.reserve(static_cast<std::size_t>(automorphism_count(G)));
  for_each_automorphism(G, [&](const Automorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<GLMatrix> sylow_Tp(int p) {
  std::vector<GLMatrix> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) out.push_back(GLMatrix::from_rows(p, {{1, a, b}, {0, 1, c}, {0, 0, 1}}));
  return out;
}

std::vector<MixedMatrix> sylow_Mp(int p) {
  std::vector<MixedMatrix> out;
  for (int c = 0; c < p; ++c)
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) out.emplace_back(p, 1, c, a, 1 + static_cast<std::int64_t>(p) * b);
  return out;
}

// ------------------------------------------------------------- holomorph

Perm identity_perm(int n) {
  Perm r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Perm compose_perm(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[static_cast<std::size_t>(g[i])];
  return r;
}

Perm inverse_perm(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
  return r;
}

HolomorphElement holomorph_mul(const AbelianGroup& G, const HolomorphElement& x, const HolomorphElement& y) {
  return {G.add(x.translation, x.twist[static_cast<std::size_t>(y.translation)]), compose_perm(x.twist, y.twist)};
}

HolomorphElement holomorph_identity(const AbelianGroup& G) { return {0, identity_perm(G.order())}; }

HolomorphElement holomorph_inverse(const AbelianGroup& G, const HolomorphElement& x) {
  // (a, f)^-1 = (-f^-1(a), f^-1)
  Perm fi = inverse_perm(x.twist);
  return {G.neg(fi[static_cast<std::size_t>(x.translation)]), std::move(fi)};
}

}  // namespace braces
