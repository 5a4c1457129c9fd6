#include "ialg/numeric.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "ialg/error.hpp"

namespace ialg {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) noexcept { return std::lcm(a, b); }

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int alpha = 0;
    while (n % p == 0) {
      n /= p;
      ++alpha;
    }
    if (alpha > 0) out.emplace_back(p, alpha);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* first = text.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational{*v, 1};
  }
  auto num = parse_int(std::string_view(text).substr(0, slash));
  auto den = parse_int(std::string_view(text).substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational::of(*num, *den);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace ialg
