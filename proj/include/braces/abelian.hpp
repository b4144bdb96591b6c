#pragma once

// Finite abelian p-groups of order p, p^2, p^3 used as additive carriers, and
// their automorphisms: GL_n(F_p) matrices, the mixed-modulus matrices acting
// on Z/p x Z/p^2, and unit scalars on cyclic groups.
//
// Elements are addressed by a mixed-radix index with the last coordinate
// varying fastest, so (x, y) in Z/p x Z/p^2 has index x * p^2 + y.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braces/modint.hpp"

namespace braces {

using Coords = std::vector<std::int64_t>;
/// A bijection of element indices; perm[i] is the image of element i.
using Perm = std::vector<int>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ShapeKind { Cyclic, Elementary, Mixed };

struct GroupElement {
  Coords coords;
  int index = 0;
  bool operator==(const GroupElement&) const = default;
};

class AbelianGroup {
 public:
  /// moduli must be one of [p], [p^2], [p^3], [p,p], [p,p,p], [p,p^2], or
  /// [1] for the trivial group (which shows up as a quotient).
  AbelianGroup(int p, std::vector<std::int64_t> moduli);

  /// k = 0 gives the trivial group.
  static AbelianGroup cyclic(int p, unsigned k);
  static AbelianGroup elementary(int p, unsigned rank);
  static AbelianGroup mixed(int p);
  /// Parses the shape names produced by shape_name(), e.g. "z8", "z2xz4",
  /// "z3xz3xz3", or the generic spellings "zp", "zp2", "zp3", "zpxzp",
  /// "zpxzpxzp", "zpxzp2" (and "zp_p2" style aliases) for the given prime.
  static AbelianGroup parse(int p, const std::string& shape);

  int p() const { return p_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  int order() const { return order_; }
  ShapeKind kind() const { return kind_; }
  /// e.g. "z2xz4"
  std::string shape_name() const;
  /// Prime-independent name, e.g. "zpxzp2"
  std::string generic_shape_name() const;

  Coords coords(int index) const { return coords_[static_cast<std::size_t>(index)]; }
  int index(const Coords& c) const;
  GroupElement element(int index) const { return {coords(index), index}; }
  GroupElement element(const Coords& c) const;

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int scale(int a, std::int64_t k) const;
  int element_order(int a) const;
  /// Indices of the unit vectors, one per coordinate.
  std::vector<int> basis() const;

  bool operator==(const AbelianGroup& o) const { return p_ == o.p_ && moduli_ == o.moduli_; }

 private:
  int p_;
  std::vector<std::int64_t> moduli_;
  int order_;
  ShapeKind kind_;
  std::vector<Coords> coords_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

/// n x n matrix over F_p, n <= 3, stored row-major.
struct GLMatrix {
  int p = 2;
  int n = 1;
  std::array<std::int64_t, 9> a{};

  static GLMatrix identity(int p, int n);
  static GLMatrix from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows);

  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t det() const;
  GLMatrix operator*(const GLMatrix& o) const;
  GLMatrix pow(std::uint64_t k) const;
  GLMatrix inverse() const;
  Coords apply(const Coords& v) const;
  bool operator==(const GLMatrix&) const = default;
};

/// The automorphism ( x  y ; p*z  t ) of Z/p x Z/p^2. x, y, z live mod p and
/// t mod p^2; only p*z mod p^2 matters, so z is kept reduced mod p.
struct MixedMatrix {
  int p = 2;
  std::int64_t x = 1, y = 0, z = 0, t = 1;

  MixedMatrix() = default;
  MixedMatrix(int p, std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t t);
  static MixedMatrix identity(int p) { return {p, 1, 0, 0, 1}; }

  bool invertible() const { return mod(x * t, p) != 0; }
  /// ( 1 c ; p*a 1+p*b ) form
  bool in_sylow() const { return x == 1 && mod(t, p) == 1; }
  MixedMatrix inverse() const;
  Coords apply(const Coords& v) const;
  bool operator==(const MixedMatrix&) const = default;
};

/// Row-wise reduced product: first row mod p, second row mod p^2.
MixedMatrix mixed_mul(const MixedMatrix& A, const MixedMatrix& B);

/// Closed power of A = (1, c; p*a, 1+p*b) in M_p:
/// A^n = (1, n*c; p*n*a, 1 + p*n*b + p*C(n,2)*a*c). Throws if A is not in M_p.
MixedMatrix mixed_pow(const MixedMatrix& A, std::uint64_t n);

struct UnitScalar {
  std::int64_t modulus = 2;
  std::int64_t value = 1;
  bool operator==(const UnitScalar&) const = default;
};

class Automorphism {
 public:
  using Payload = std::variant<GLMatrix, MixedMatrix, UnitScalar>;

  explicit Automorphism(GLMatrix m);
  explicit Automorphism(MixedMatrix m);
  explicit Automorphism(UnitScalar u);

  static Automorphism identity(const AbelianGroup& G);
  /// Recovers the structured automorphism from an index permutation. Throws
  /// ShapeError if perm is not an additive bijection of G.
  static Automorphism from_permutation(const AbelianGroup& G, const Perm& perm);

  const Payload& payload() const { return payload_; }
  bool fits(const AbelianGroup& G) const;

  Coords apply(const Coords& v) const;
  GroupElement apply(const AbelianGroup& G, const GroupElement& v) const;
  int apply_index(const AbelianGroup& G, int index) const;
  /// (*this) o g
  Automorphism compose(const Automorphism& g) const;
  Automorphism inverse() const;
  Automorphism pow(std::uint64_t k) const;
  Perm as_permutation(const AbelianGroup& G) const;
  bool is_identity() const;

  std::string to_string() const;
  bool operator==(const Automorphism&) const = default;

 private:
  Payload payload_;
};

/// Number of automorphisms of G: |GL_n(F_p)|, p^3 (p-1)^2, or phi(p^k).
std::uint64_t automorphism_count(const AbelianGroup& G);

/// Visits every automorphism of G exactly once, lexicographically on the
/// payload (row-major matrix entries, (x,y,z,t), or the unit value). Stops
/// early when visit returns false.
void for_each_automorphism(const AbelianGroup& G, const std::function<bool(const Automorphism&)>& visit);

std::vector<Automorphism> automorphism_group(const AbelianGroup& G);

/// Upper unitriangular 3x3 matrices over F_p, ordered by (a, b, c) for
/// ( 1 a b ; 0 1 c ; 0 0 1 ).
std::vector<GLMatrix> sylow_Tp(int p);

/// ( 1 c ; p*a 1+p*b ) with a, b, c in [0, p), ordered by (c, a, b).
std::vector<MixedMatrix> sylow_Mp(int p);

/// Element (a, f) of the holomorph A x| Aut(A).
struct HolomorphElement {
  int translation = 0;
  Perm twist;
  bool operator==(const HolomorphElement&) const = default;
};

/// (a, f)(b, g) = (a + f(b), f o g)
HolomorphElement holomorph_mul(const AbelianGroup& G, const HolomorphElement& x, const HolomorphElement& y);
HolomorphElement holomorph_identity(const AbelianGroup& G);
HolomorphElement holomorph_inverse(const AbelianGroup& G, const HolomorphElement& x);

Perm identity_perm(int n);
Perm compose_perm(const Perm& f, const Perm& g);  // f o g
Perm inverse_perm(const Perm& f);

}  // namespace braces
