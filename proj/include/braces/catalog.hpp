#pragma once

// The complete lists of left braces of order p, p^2 and p^3, one entry per
// displayed multiplication, each materialized as a verified Brace.
//
// Entry ids follow  <p>^<k>.<shape>.soc<n>.<family>[(<param>=<v>)]
// e.g. "3^3.z3xz9.soc3.f5(a=0)" or "2^2.z4.soc2.iii". Families are numbered
// f1, f2, ... in display order under each socle heading; the order p and p^2
// braces use the roman type names i..v instead.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "braces/brace.hpp"

namespace braces {

using Formula = std::function<Coords(const Coords&, const Coords&)>;

struct CatalogEntry {
  std::string id;
  int p = 2;
  std::vector<std::int64_t> moduli;
  int socle_order = 1;
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  GroupName claimed_mult_group;
  /// Group name as originally annotated for this row. Differs from
  /// claimed_mult_group only for the rows in annotation_errata().
  GroupName printed_mult_group;
  /// Additive type and socle heading, e.g. "Z/p x Z/p^2, socle p".
  std::string locator;
  /// Small-catalog type (i..v) expected for the socle quotient, "1" when the
  /// quotient is trivial of order 1, empty when the socle is trivial.
  std::string quotient_type;
  /// Closed-form product on coordinates; results may be unreduced.
  Formula formula;

  AbelianGroup additive() const { return {p, moduli}; }
  std::string params_string() const;
};

struct CatalogBrace {
  CatalogEntry entry;
  Brace brace;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest positive quadratic non-residue mod p. Throws for p = 2.
std::int64_t epsilon(int p);

/// Default upper bound on p accepted by catalog_p3 and small_catalog.
inline constexpr int kDefaultMaxPrime = 7;

/// Types (i)..(v): one brace of order p and four of order p^2.
std::vector<CatalogBrace> small_catalog(int p, int max_prime = kDefaultMaxPrime);

/// Every brace of order p^3. Throws CatalogError if p is not a prime <= max_prime.
std::vector<CatalogBrace> catalog_p3(int p, int max_prime = kDefaultMaxPrime);

/// Entry metadata only, without building tables (cheap).
std::vector<CatalogEntry> catalog_entries(int p, int max_prime = kDefaultMaxPrime);
std::vector<CatalogEntry> small_catalog_entries(int p, int max_prime = kDefaultMaxPrime);

/// Ids of entries whose printed group annotation is contradicted by the
/// table: the trivial brace on Z/p x Z/p^2 (printed M3(p)) and, at p = 3, the
/// socle p^2 family with eps*C(y1,2) (printed M3(3), exponent 3 in fact).
std::vector<std::string> annotation_errata(int p);

/// Builds the table of one entry (verifies it).
Brace build_entry(const CatalogEntry& e);

/// Id of the small-catalog brace of the given type, e.g. ("iii", 2) -> "2^2.z4.soc2.iii".
std::string small_entry_id(int p, const std::string& type);

/// Looks up any entry (small or order p^3) by id; throws CatalogError if unknown.
CatalogEntry find_entry(const std::string& id, int max_prime = kDefaultMaxPrime);

GroupElement entry_multiply(const CatalogEntry& e, const GroupElement& u, const GroupElement& v);

/// Order of the 3x3 Jordan block with eigenvalue 1 over F_p: p for p odd, 4 for p = 2.
/// The family built from it exists only when this equals p.
std::uint64_t jordan3_order(int p);

// ---- trivial-socle braces at p = 2 from explicit bijective 1-cocycles ----

/// pi on T_2 given by pi(1 n x; 0 1 y; 0 0 1) = (c'x + y + x0 n + x n, b y + x + n y, n).
/// case_no 1..4 selects (x0, b, c') = (1,1,0), (1,0,1), (0,1,0), (0,0,1).
CocycleTable t2_cocycle(int case_no);

/// The eight listed assignments vector -> (1 c; 2a 1+2b) on Z/2 x Z/4.
CocycleTable m2_listed_cocycle();

/// The closed form pi(1 c; 2a 1+2b) = (a+b+c+ac, a + 2(a+b+c+ab+sum_{i<a} i)) as printed.
/// It is not a bijection; returned so the defect is testable.
CocycleTable m2_printed_closed_form();

}  // namespace braces
