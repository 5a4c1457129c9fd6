#include <doctest.h>

#include <numeric>
#include <set>

#include "ialg/audit.hpp"
#include "ialg/constructors.hpp"
#include "ialg/error.hpp"

using namespace ialg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

// Strictly non-commutative L_n(m): x*y != y*x for all distinct non-identity
// x, y. Counted directly from the rule x*y = m*y - (m-1)*x mod n.
std::uint64_t count_strict(std::int64_t n) {
  std::uint64_t count = 0;
  for (std::int64_t m = 2; m < n; ++m) {
    if (std::gcd(m, n) != 1 || std::gcd(m - 1, n) != 1) continue;
    bool strict = true;
    for (std::int64_t x = 1; x <= n && strict; ++x)
      for (std::int64_t y = x + 1; y <= n && strict; ++y) {
        const auto xy = ((m * y - (m - 1) * x) % n + n) % n;
        const auto yx = ((m * x - (m - 1) * y) % n + n) % n;
        if (xy == yx) strict = false;
      }
    if (strict) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("audit") {

TEST_CASE("registry") {
  CHECK(registry().size() >= 20);
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK(c.instances(c.defaults).size() > 0);
  }
  CHECK(kind_of([] { lookup_claim("T-NOPE"); }) == ErrorKind::UnknownClaim);
}

TEST_CASE("range specs") {
  const auto r = RangeSpec::parse("n=5..30,m=2");
  CHECK(r.at("n") == std::pair<std::int64_t, std::int64_t>{5, 30});
  CHECK(r.at("m") == std::pair<std::int64_t, std::int64_t>{2, 2});
  CHECK(kind_of([] { RangeSpec::parse("n=5..,"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { RangeSpec::parse("n=9..5"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { audit("T-IDEM", RangeSpec::parse("n=2..100000")); }) == ErrorKind::RangeTooLarge);
  CHECK(kind_of([] { audit("T-IDEM", RangeSpec::parse("q=2..3")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("T-IDEM holds on a small range and counts add up") {
  const auto r = audit("T-IDEM", RangeSpec::parse("n=2..10"));
  CHECK(r.checked > 0);
  CHECK(r.refuted.empty());
  CHECK(r.checked == r.confirmed + r.refuted.size());
}

TEST_CASE("refutations replay") {
  const auto r = audit("T-STRONG-FAMILY", RangeSpec::parse("n=5..9"));
  REQUIRE_FALSE(r.refuted.empty());
  for (const auto& f : r.refuted) {
    const auto again = replay("T-STRONG-FAMILY", f.params);
    REQUIRE(again);
    CHECK(*again == f.counterexample);
  }
}

TEST_CASE("bisimple groupoids under both ideal conventions") {
  const auto a = audit("T-BISIMPLE-GPD");
  for (const auto& f : a.refuted) {
    std::int64_t t = 0, u = 0;
    for (const auto& [k, v] : f.params) (k == "t" ? t : u) = v;
    CHECK(t == u);
  }
  CHECK(audit("T-BISIMPLE-GPD-B").refuted.empty());
}

TEST_CASE("F_n against an independent count") {
  for (std::int64_t n = 5; n <= 45; n += 2) {
    const auto s = strict_noncommutative_count(n);
    CHECK_MESSAGE(s.brute == count_strict(n), "n=" << n);
    CHECK(s.formula == fn_formula(n));
    CHECK(s.brute == s.formula);
  }
  CHECK(kind_of([] { strict_noncommutative_count(8); }) == ErrorKind::BadN);
}

TEST_CASE("errata certify") {
  CHECK(errata().size() >= 10);
  for (const auto& e : errata()) CHECK_MESSAGE(e.certify(), e.id);
  CHECK(lookup_erratum("idempotent-15-9-6").claim == "T-IDEM");
  CHECK(kind_of([] { lookup_erratum("nope"); }) == ErrorKind::UndefinedName);
}

TEST_CASE("homomorphisms") {
  const auto z6 = zn_group(6);
  const auto z3 = zn_group(3);
  std::vector<Index> mod3(6), mod4(6);
  for (Index i = 0; i < 6; ++i) {
    mod3[i] = i % 3;
    mod4[i] = i % 4;
  }
  CHECK(check_homomorphism(z6, z3, {0}, {mod3}).ok);
  const auto bad = check_homomorphism(z6, zn_group(4), {0}, {mod4});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->a == 1);
  CHECK(bad.counterexample->b == 5);
  // (3, 3) is also a violation: 6 mod 6 = 0, but 3 + 3 mod 4 = 2.
  CHECK((mod4[(3 + 3) % 6]) != (mod4[3] + mod4[3]) % 4);
  CHECK(kind_of([&] { check_homomorphism(z6, z3, {std::nullopt}, {mod3}); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { check_homomorphism(z6, z3, {0}, {{0, 1, 2, 0, 1, 7}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("report JSON shape") {
  const auto j = to_json(audit("T-COMM-LOOP", RangeSpec::parse("n=5..15")));
  for (const char* key : {"claim", "range", "checked", "confirmed", "refuted", "errata_refs", "runtime_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["claim"] == "T-COMM-LOOP");
}

}
