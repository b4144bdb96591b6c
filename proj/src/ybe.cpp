#include "braces/ybe.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace braces {

SolutionMap::SolutionMap(int n, std::vector<std::pair<int, int>> table) : n_(n), s_(std::move(table)) {
  if (n < 1 || s_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw BraceError("solution table must have n*n entries");
  for (const auto& [x, y] : s_)
    if (x < 0 || x >= n || y < 0 || y >= n) throw BraceError("solution entry out of range");
}

bool SolutionMap::is_flip() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if ((*this)(a, b) != std::pair{b, a}) return false;
  return true;
}

namespace {

// first a in [lo, hi) with a braid failure, as the witness triple
std::optional<std::array<int, 3>> braid_scan(const SolutionMap& m, int lo, int hi) {
  const int n = m.size();
  for (int a = lo; a < hi; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // left side: (s x id)(id x s)(s x id)
        auto [x1, y1] = m(a, b);
        auto [y2, z2] = m(y1, c);
        auto [x3, y3] = m(x1, y2);
        // right side: (id x s)(s x id)(id x s)
        auto [v1, w1] = m(b, c);
        auto [u2, v2] = m(a, v1);
        auto [v3, w3] = m(v2, w1);
        if (x3 != u2 || y3 != v3 || z2 != w3) return std::array<int, 3>{a, b, c};
      }
  return std::nullopt;
}

VerifyReport fail(std::string what, std::vector<int> w) { return {Violation{std::move(what), std::move(w)}}; }

}  // namespace

VerifyReport verify_yang_baxter(const SolutionMap& m, int jobs) {
  const int n = m.size();
  {
    std::vector<int> seen(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n * n; ++i) {
      auto [x, y] = m.table()[static_cast<std::size_t>(i)];
      int& slot = seen[static_cast<std::size_t>(x) * n + y];
      if (slot >= 0) return fail("bijective", {slot / n, slot % n, i / n, i % n});
      slot = i;
    }
  }

  jobs = std::clamp(jobs, 1, n);
  std::optional<std::array<int, 3>> bad;
  if (jobs == 1) {
    bad = braid_scan(m, 0, n);
  } else {
    std::vector<std::optional<std::array<int, 3>>> part(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] { part[static_cast<std::size_t>(j)] = braid_scan(m, n * j / jobs, n * (j + 1) / jobs); });
    for (auto& t : pool) t.join();
    for (const auto& r : part)
      if (r) {
        bad = r;
        break;
      }
  }
  if (bad) return fail("braid", {(*bad)[0], (*bad)[1], (*bad)[2]});

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [x, y] = m(a, b);
      if (m(x, y) != std::pair{a, b}) return fail("involutive", {a, b});
    }
  for (int a = 0; a < n; ++a) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      char& h = hit[static_cast<std::size_t>(m(a, b).first)];
      if (h) return fail("non-degenerate (left)", {a, b});
      h = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      char& h = hit[static_cast<std::size_t>(m(a, b).second)];
      if (h) return fail("non-degenerate (right)", {a, b});
      h = 1;
    }
  }
  return {};
}

SolutionMap solution_from_brace(const Brace& B, int jobs) {
  const int n = B.order();
  std::vector<Perm> lambda_inv;
  for (int a = 0; a < n; ++a) lambda_inv.push_back(inverse_perm(B.lambda(a)));
  std::vector<std::pair<int, int>> s;
  s.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int x = B.lambda(a)[static_cast<std::size_t>(b)];
      s.emplace_back(x, lambda_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)]);
    }
  SolutionMap m(n, std::move(s));
  const VerifyReport r = verify_yang_baxter(m, jobs);
  if (!r.ok()) throw BraceError("solution of " + B.name() + " fails: " + r.violation->to_string());
  return m;
}

bool solutions_conjugate(const SolutionMap& s1, const SolutionMap& s2, const Perm& F) {
  const int n = s1.size();
  if (s2.size() != n || static_cast<int>(F.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [x, y] = s1(a, b);
      auto [u, v] = s2(F[static_cast<std::size_t>(a)], F[static_cast<std::size_t>(b)]);
      if (u != F[static_cast<std::size_t>(x)] || v != F[static_cast<std::size_t>(y)]) return false;
    }
  return true;
}

std::vector<std::array<int, 4>> solution_quadruples(const SolutionMap& m) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b) out.push_back({a, b, m(a, b).first, m(a, b).second});
  return out;
}

}  // namespace braces
