#pragma once

// The set-theoretic solution of the Yang-Baxter equation attached to a left
// brace, s(a, b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a)), and an
// exhaustive checker for the braid relation, involutivity and non-degeneracy.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "braces/brace.hpp"

namespace braces {

class SolutionMap {
 public:
  /// Raw table: s[a * n + b] = s(a, b). Not checked; see verify_yang_baxter.
  SolutionMap(int n, std::vector<std::pair<int, int>> table);

  int size() const { return n_; }
  const std::pair<int, int>& operator()(int a, int b) const { return s_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<std::pair<int, int>>& table() const { return s_; }
  std::vector<std::pair<int, int>>& mutable_table() { return s_; }

  bool is_flip() const;
  bool operator==(const SolutionMap&) const = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> s_;
};

/// Braid relation on all triples, then involutivity, then non-degeneracy
/// (first coordinate bijective in b for each a, second bijective in a for
/// each b). Axiom names: "bijective", "braid", "involutive",
/// "non-degenerate (left)", "non-degenerate (right)". Triples are scanned in
/// lexicographic order, split over `jobs` threads; the witness reported is
/// the first in that order regardless of jobs.
VerifyReport verify_yang_baxter(const SolutionMap& m, int jobs = 1);

/// Builds the solution of B and verifies it; throws BraceError if a check
/// fails (impossible for a valid brace).
SolutionMap solution_from_brace(const Brace& B, int jobs = 1);

/// True iff (F x F) o s1 = s2 o (F x F), with F given on element indices.
bool solutions_conjugate(const SolutionMap& s1, const SolutionMap& s2, const Perm& F);

/// (a, b, s1, s2) quadruples in lexicographic (a, b) order.
std::vector<std::array<int, 4>> solution_quadruples(const SolutionMap& m);

}  // namespace braces
