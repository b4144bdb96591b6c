#pragma once

// Isomorphism testing of braces on a common additive group, partition into
// classes, the exhaustive enumeration oracle (regular subgroups of the
// holomorph), and trivial-socle nonexistence checks via bijective 1-cocycles
// on a Sylow p-subgroup of Aut(A).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braces/brace.hpp"
#include "braces/catalog.hpp"

namespace braces {

/// F with F(x.y) = F(x).F(y); perm is F on element indices.
struct IsoWitness {
  Automorphism F;
  Perm perm;
};

/// Isomorphism invariants: socle order, multiplicative group, and the sorted
/// multiset of per-element statistics (additive order, multiplicative order,
/// order of lambda_a, number of fixed points of lambda_a).
struct Fingerprint {
  int socle_order = 0;
  std::string mult_group;
  std::vector<std::array<int, 4>> element_stats;
  bool operator==(const Fingerprint&) const = default;
  std::string summary() const;
};

Fingerprint fingerprint(const Brace& B);

/// True iff perm is an additive automorphism carrying B1's product to B2's.
bool is_isomorphism(const Brace& B1, const Brace& B2, const Perm& perm);

/// Exhaustive search over Aut(A). Different additive shapes or fingerprints
/// short-circuit to nullopt. The witness is checked on all pairs.
std::optional<IsoWitness> are_isomorphic(const Brace& B1, const Brace& B2);

struct ClassificationReport {
  /// ids per class; each list sorted, classes ordered by representative
  std::vector<std::vector<std::string>> classes;
  /// smallest id in each class
  std::vector<std::string> representatives;
  std::map<std::string, Fingerprint> fingerprints;
};

ClassificationReport classify(const std::vector<std::pair<std::string, Brace>>& braces);
ClassificationReport classify_catalog(int p, int max_prime = kDefaultMaxPrime);

// ------------------------------------------------------------ enumeration

struct EnumerateOptions {
  bool up_to_iso = true;
  /// keep only braces with trivial socle (lambda injective)
  bool trivial_socle_only = false;
  /// search nodes before giving up; 0 = unlimited
  std::uint64_t max_nodes = 0;
  /// line-oriented progress file; empty = none. Resumed from if present.
  std::string checkpoint_path;
  int jobs = 1;
};

enum class EnumStatus { Complete, ResourceBound };

struct EnumerationResult {
  EnumStatus status = EnumStatus::Complete;
  /// class representatives (up_to_iso) or every brace found, each given by
  /// its lambda table; canonical order
  std::vector<Brace> braces;
  /// regular subgroups visited, counted with multiplicity
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
  std::size_t seeds_done = 0;
  std::size_t seeds_total = 0;
};

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumerates left braces on A as regular subgroups {(a, lambda_a)} of the
/// holomorph. Twists are restricted to automorphisms of p-power order; the
/// search assigns the smallest uncovered translation next and closes the
/// partial subgroup after every choice. In up_to_iso mode the twist over a
/// fixed translation t0 runs over orbit representatives of Stab(t0) acting
/// by conjugation, and results are merged by Aut(A)-orbit; the representative
/// of a class is the lexicographically smallest lambda table in its orbit.
EnumerationResult enumerate_braces(const AbelianGroup& A, const EnumerateOptions& opts = {});

// --------------------------------------------------------- nonexistence

/// All bijective 1-cocycles pi: S -> A on the subgroup S = domain of Aut(A),
/// found by choosing pi on a generating set of S and extending along
/// pi(g s) = pi(g) + g pi(s). fixed[i], when set, pins the value on generator i.
struct CocycleSearch {
  std::vector<Automorphism> domain;
  std::vector<int> generators;  // indices into domain
  std::vector<CocycleTable> cocycles;
  std::uint64_t candidates = 0;
};

CocycleSearch search_cocycles(const AbelianGroup& A, const std::vector<Automorphism>& domain,
                              std::vector<int> generators = {}, const std::vector<std::optional<int>>& fixed = {});

/// T_p for (Z/p)^3, M_p for Z/p x Z/p^2, the p-part of the units for Z/p^3.
std::vector<Automorphism> sylow_subgroup(const AbelianGroup& A);

struct NonexistenceCase {
  std::string shape;
  std::uint64_t sylow_order = 0;
  std::uint64_t candidates = 0;
  std::uint64_t cocycles = 0;
  /// isomorphism classes among the cocycle braces
  std::size_t classes = 0;
  std::string method;
};

struct NonexistenceReport {
  int p = 2;
  std::vector<NonexistenceCase> cases;
};

/// For each shape of order p^3, searches all bijective 1-cocycles on the
/// Sylow p-subgroup of Aut(A); every trivial-socle brace is conjugate to one.
NonexistenceReport nonexistence_checks(int p);

}  // namespace braces
