#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ialg {

/// Least nonnegative residue of v modulo n (n >= 1).
constexpr std::int64_t mod(std::int64_t v, std::int64_t n) noexcept {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

/// a·b mod n for residues a, b in [0, n); safe for any 64-bit modulus.
constexpr std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) noexcept {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::int64_t>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(n));
}

/// a+b mod n for residues a, b in [0, n).
constexpr std::int64_t addmod(std::int64_t a, std::int64_t b, std::int64_t n) noexcept {
  return a >= n - b ? a - (n - b) : a + b;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::uint64_t lcm(std::uint64_t a, std::uint64_t b) noexcept;
bool is_prime(std::int64_t n) noexcept;

/// Prime factorization as (p, alpha) pairs in ascending p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Overflow-checked product; nullopt on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept;

/// A reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den = 1);
  bool is_integer() const noexcept { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "7", "-3" or "33/2".
std::optional<Rational> parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace ialg
