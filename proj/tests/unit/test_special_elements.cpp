#include <doctest.h>

#include <numeric>

#include "ialg/constructors.hpp"
#include "ialg/error.hpp"
#include "ialg/special_elements.hpp"

using namespace ialg;

namespace {

std::vector<Index> members(const SpecialElementReport& r) {
  std::vector<Index> out;
  for (const auto& e : r.elements) out.push_back(e.element);
  return out;
}

}  // namespace

TEST_SUITE("special-elements") {

TEST_CASE("Z_n multiplicative elements match number theory") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const auto s = zn_semigroup(n, ZnOp::mul);
    std::vector<Index> units, zd, idem, nil;
    for (std::int64_t a = 0; a < n; ++a) {
      if (std::gcd(a, n) == 1) units.push_back(a);
      if (a != 0 && std::gcd(a, n) != 1) zd.push_back(a);
      if (a * a % n == a) idem.push_back(a);
      std::int64_t p = a;
      for (int k = 0; k < 8 && p != 0; ++k) p = p * a % n;
      if (a != 0 && p == 0) nil.push_back(a);
    }
    CHECK(members(find_special(s, SpecialKind::unit)) == units);
    CHECK(members(find_special(s, SpecialKind::zero_divisor)) == zd);
    CHECK(members(find_special(s, SpecialKind::idempotent)) == idem);
    CHECK(members(find_special(s, SpecialKind::nilpotent)) == nil);
  }
}

TEST_CASE("certificates re-verify and flag trivial idempotents") {
  const auto s = zn_semigroup(30, ZnOp::mul);
  for (auto kind : {SpecialKind::unit, SpecialKind::zero_divisor, SpecialKind::idempotent, SpecialKind::nilpotent}) {
    for (const auto& e : find_special(s, kind).elements) CHECK(verify_certificate(s, kind, e));
  }
  const auto idem = find_special(s, SpecialKind::idempotent);
  for (const auto& e : idem.elements) CHECK(e.trivial == (e.element == 0 || e.element == 1));
  const auto nil = find_special(zn_semigroup(8, ZnOp::mul), SpecialKind::nilpotent);
  REQUIRE(nil.elements.size() == 3);
  CHECK(*nil.elements[0].power == 3);  // 2^3 = 8
  CHECK(*nil.elements[1].power == 2);  // 4^2 = 16
}

TEST_CASE("missing identity or absorber") {
  auto kind_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { find_special(zn_group(6), SpecialKind::zero_divisor); }) == ErrorKind::NoAbsorber);
  CHECK(kind_of([] { find_special(zn_groupoid(5, 2, 3), SpecialKind::unit); }) == ErrorKind::NoIdentity);
}

TEST_CASE("quasi elements sit at the absorber outside their mask") {
  const auto s = product({zn_semigroup(6, ZnOp::mul), zn_semigroup(4, ZnOp::mul)});
  const auto r = find_quasi_special(s, SpecialKind::idempotent, 0b01);
  CHECK(r.quasi);
  const auto m = s.magma();
  std::vector<Index> want;
  for (std::int64_t a = 0; a < 6; ++a) {
    if (a * a % 6 == a) want.push_back(m->join({static_cast<Index>(a), 0}));
  }
  std::sort(want.begin(), want.end());
  CHECK(members(r) == want);
  for (const auto& e : r.elements) CHECK(*e.active_mask == 0b01u);
}

TEST_CASE("Cauchy audit of a product of cyclic groups") {
  const auto s = product({zn_group(2), zn_group(3)});
  const auto a = cauchy_audit(s);
  CHECK(a.structure_order == 6);
  // (1,1) and (1,2) have component orders 2 and 3: lcm and product are 6.
  REQUIRE(a.book.size() == 2);
  for (const auto& e : a.book) CHECK(e.standard_order == 6);
  CHECK(a.book_failures.empty());

  // In a product of groups each r_i divides |G_i|, so the book form never
  // fails; failures need a component without Lagrange's property.
  const auto t = product({zn_group(4), zn_group(6)});
  const auto b = cauchy_audit(t);
  CHECK(b.structure_order == 24);
  CHECK(b.book_failures.empty());
  for (const auto& e : b.standard) {
    std::uint64_t l = 1;
    for (auto r : e.component_orders) l = std::lcm(l, r);
    CHECK(e.standard_order == l);
    CHECK(24 % l == 0);
  }
}

}
