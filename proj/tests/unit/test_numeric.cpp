#include <doctest.h>

#include "ialg/numeric.hpp"

using namespace ialg;

TEST_SUITE("numeric") {

TEST_CASE("mod reduces negatives into range") {
  CHECK(mod(-1, 7) == 6);
  CHECK(mod(14, 7) == 0);
  CHECK(mulmod(1'000'000'000'000'000'000, 1'000'000'000'000'000'000, 1'000'000'007) == 2401);
  CHECK(addmod(6, 6, 7) == 5);
}

TEST_CASE("gcd lcm and primality") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(lcm(4, 6) == 12);
  int primes = 0;
  for (int p = 0; p < 100; ++p) primes += is_prime(p);
  CHECK(primes == 25);
}

TEST_CASE("factorize multiplies back") {
  for (std::int64_t n = 2; n < 2000; ++n) {
    std::int64_t back = 1;
    for (auto [p, a] : factorize(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < a; ++i) back *= p;
    }
    CHECK(back == n);
  }
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK(checked_mul(1ULL << 32, 1ULL << 31) == (1ULL << 63));
  CHECK_FALSE(checked_mul(1ULL << 32, 1ULL << 32));
  CHECK(checked_pow(3, 4) == 81u);
  CHECK_FALSE(checked_pow(2, 64));
}

TEST_CASE("rationals parse reduced") {
  CHECK(parse_rational("33/2") == Rational{33, 2});
  CHECK(parse_rational("6/4") == Rational{3, 2});
  CHECK(parse_rational("-3") == Rational{-3, 1});
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("x"));
  CHECK(to_string(Rational::of(4, -6)) == "-2/3");
}

}
