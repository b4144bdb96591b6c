#pragma once

// Finite left braces stored as full multiplication tables over an additive
// carrier, with the derived views: lambda maps, socle, powers, the
// multiplicative group's isomorphism type, socle quotients, and construction
// from a bijective 1-cocycle.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braces/abelian.hpp"

namespace braces {

class BraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;  // element indices
  std::string to_string() const;
};

struct VerifyReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Checks that table (row-major, table[a * n + b] = a.b) makes the elements of
/// A a left brace with multiplicative neutral 0. Axioms are checked in the
/// order: neutral, associativity, inverses, left brace property; the first
/// counterexample in index order is reported. Throws BraceError if the table
/// has the wrong size or an out-of-range entry.
VerifyReport verify_brace(const AbelianGroup& A, const std::vector<int>& table);

class Brace {
 public:
  /// Throws BraceError (message carries the witness) unless verify_brace passes.
  Brace(AbelianGroup additive, std::vector<int> table, std::string name = {});

  static Brace trivial(const AbelianGroup& A);
  static Brace from_product(const AbelianGroup& A, const std::function<int(int, int)>& mul, std::string name = {});
  /// x.y = x + lambda[x](y)
  static Brace from_lambda(const AbelianGroup& A, const std::vector<Perm>& lambda, std::string name = {});

  const AbelianGroup& additive() const { return additive_; }
  int order() const { return additive_.order(); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& table() const { return table_; }
  /// lambda_a(b) = a.b - a, as an index permutation
  const Perm& lambda(int a) const { return lambda_[static_cast<std::size_t>(a)]; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool operator==(const Brace& o) const { return additive_ == o.additive_ && table_ == o.table_; }

 private:
  AbelianGroup additive_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Perm> lambda_;
  std::string name_;
};

Automorphism lambda_of(const Brace& B, const GroupElement& a);

struct SocleInfo {
  std::vector<int> elements;
  int order = 0;
};

/// {a : lambda_a = id}. Also checks that it is closed under both operations
/// and that a.b = a + b on it; a failure there throws BraceError.
SocleInfo socle(const Brace& B);

/// (id + lambda_x + ... + lambda_x^{n-1})(x)
GroupElement power(const Brace& B, const GroupElement& x, std::uint64_t n);
int power_index(const Brace& B, int x, std::uint64_t n);

struct GroupName {
  enum class Kind { Cyclic, ZpxZp2, ZpxZp, Elementary3, D4, Q, Mp, M3p };
  Kind kind = Kind::Cyclic;
  int p = 2;
  /// order of the cyclic group is p^k (Cyclic only)
  unsigned k = 1;

  static GroupName cyclic(int p, unsigned k) { return {Kind::Cyclic, p, k}; }
  static GroupName of(Kind kind, int p) { return {kind, p, 0}; }
  /// Z/8, Z/2xZ/4, Z/3xZ/3, (Z/3)^3, D4, Q, M(5), M3(5)
  std::string to_string() const;
  static GroupName parse(const std::string& s);
  bool operator==(const GroupName&) const = default;
};

/// Multiplicative element orders, indexed by element.
std::vector<int> multiplicative_orders(const Brace& B);
bool is_multiplicatively_abelian(const Brace& B);

/// Names (B, .) from whether it is abelian and its element-order statistics.
/// Throws BraceError when the statistics fit no group of order p, p^2, p^3.
GroupName mult_group_name(const Brace& B);

/// The brace B/Soc(B). Its additive group is re-expressed in a standard shape;
/// projection[a] is the image of a, representative[q] the smallest element
/// of B mapping to q.
struct SocleQuotient {
  Brace quotient;
  std::vector<int> projection;
  std::vector<int> representative;
};

SocleQuotient socle_quotient(const Brace& B);
Brace quotient_by_socle(const Brace& B);

/// Identifies an abstract abelian p-group on {0..n-1} (0 is the zero) with a
/// standard AbelianGroup. Returns the group and the map standard index ->
/// abstract element.
std::pair<AbelianGroup, std::vector<int>> identify_abelian(int p, int n, const std::function<int(int, int)>& add);

/// First (b, c, a) with (b + c).a + a != b.a + c.a, if any.
std::optional<std::array<int, 3>> right_brace_violation(const Brace& B);

/// A bijective 1-cocycle: pi(AB) = pi(A) + A(pi(B)) on a subgroup of Aut(A).
struct CocycleTable {
  AbelianGroup group;
  std::vector<Automorphism> domain;
  std::vector<int> pi;  // pi[i] = image of domain[i], an element index of group
};

VerifyReport verify_cocycle(const CocycleTable& c);

/// x.y = x + pi^{-1}(x)(y). Throws BraceError if the cocycle is invalid.
Brace brace_from_cocycle(const CocycleTable& c);

}  // namespace braces
