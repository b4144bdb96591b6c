#pragma once

// Residues modulo prime powers and the small combinatorial helpers used by
// the brace formulas (binomials, triangular sums, canonical lifts).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braces {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Canonical representative of x modulo m, always in [0, m).
constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_prime(std::int64_t n);

/// n!/(m!(n-m)!) for n >= m, and 0 for n < m. Throws ArithmeticError when the
/// result does not fit in 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t m);

/// 1 + 2 + ... + (y-1); equals binom(y, 2).
std::uint64_t tri_sum(std::uint64_t y);

/// Inverse of u modulo m by extended Euclid. Throws ArithmeticError if
/// gcd(u, m) != 1.
std::int64_t inverse_mod(std::int64_t u, std::int64_t m);

class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const { return {-value_, modulus_}; }
  Residue operator*(std::int64_t k) const;

  bool is_unit() const;
  Residue inverse() const;
  Residue pow(std::uint64_t n) const;

  bool operator==(const Residue&) const = default;

  std::string to_string() const;

 private:
  void require_same_modulus(const Residue& o) const;

  std::int64_t value_;
  std::int64_t modulus_;
};

/// The integer in [0, m) representing r. This lift is what every formula uses
/// when a residue appears as an exponent, a binomial argument or a sum bound.
inline std::uint64_t lift(const Residue& r) { return static_cast<std::uint64_t>(r.value()); }

}  // namespace braces
