#include "braces/modint.hpp"

#include <numeric>

namespace braces {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t m) {
  if (n < m) return 0;
  if (m > n - m) m = n - m;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    // r * (n - m + i) / i stays integral at every step
    r = r * (n - m + i) / i;
    if (r > UINT64_MAX) throw ArithmeticError("binom overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t tri_sum(std::uint64_t y) { return y < 2 ? 0 : y * (y - 1) / 2; }

std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
  if (m <= 0) throw ArithmeticError("modulus must be positive");
  std::int64_t a = mod(u, m), b = m;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw ArithmeticError(std::to_string(u) + " is not a unit modulo " + std::to_string(m));
  return mod(x0, m);
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw ArithmeticError("modulus must be positive");
  value_ = mod(value, modulus);
}

void Residue::require_same_modulus(const Residue& o) const {
  if (o.modulus_ != modulus_) throw ArithmeticError("mixed moduli in residue arithmetic");
}

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(o);
  return {value_ + o.value_, modulus_};
}

Residue Residue::operator-(const Residue& o) const {
  require_same_modulus(o);
  return {value_ - o.value_, modulus_};
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(o);
  return {value_ * o.value_, modulus_};
}

Residue Residue::operator*(std::int64_t k) const { return {value_ * mod(k, modulus_), modulus_}; }

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1; }

Residue Residue::inverse() const { return {inverse_mod(value_, modulus_), modulus_}; }

Residue Residue::pow(std::uint64_t n) const {
  Residue base = *this, r{1, modulus_};
  while (n > 0) {
    if (n & 1U) r = r * base;
    base = base * base;
    n >>= 1U;
  }
  return r;
}

std::string Residue::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

}  // namespace braces
