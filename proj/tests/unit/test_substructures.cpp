#include <doctest.h>

#include <algorithm>

#include "ialg/constructors.hpp"
#include "ialg/error.hpp"
#include "ialg/substructures.hpp"

using namespace ialg;

namespace {

// Every nonempty subset of Z_n closed under absorption by s·p and p·s,
// checked directly from the multiplication rule.
std::vector<std::vector<Index>> brute_ideals(std::int64_t n, std::int64_t t, std::int64_t u, Side side) {
  std::vector<std::vector<Index>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::int64_t p = 0; p < n && ok; ++p) {
      if (!(mask >> p & 1)) continue;
      for (std::int64_t s = 0; s < n && ok; ++s) {
        const auto left = (t * s + u * p) % n;
        const auto right = (t * p + u * s) % n;
        if (side != Side::right && !(mask >> left & 1)) ok = false;
        if (side != Side::left && !(mask >> right & 1)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Index> m;
    for (std::int64_t i = 0; i < n; ++i)
      if (mask >> i & 1) m.push_back(static_cast<Index>(i));
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

TEST_SUITE("substructures") {

TEST_CASE("closure") {
  const auto m = zn_group(12).magma();
  CHECK(closure(*m, {8}) == std::vector<Index>{0, 4, 8});
  CHECK(closure(*m, {4, 6}) == std::vector<Index>{0, 2, 4, 6, 8, 10});
  const auto g = zn_semigroup(10, ZnOp::mul).magma();
  CHECK(closure(*g, {2}) == std::vector<Index>{2, 4, 6, 8});
  CHECK_THROWS_AS(closure(*m, {}), Error);
  CHECK_THROWS_AS(closure(*m, {12}), Error);
}

TEST_CASE("ideals of Z_n(t,u) match the definition") {
  for (std::int64_t n = 2; n <= 9; ++n)
    for (std::int64_t t = 0; t < n; ++t)
      for (std::int64_t u = 0; u < n; ++u) {
        if (t == 0 && u == 0) continue;
        const auto m = zn_groupoid(n, t, u).magma();
        for (auto side : {Side::left, Side::right, Side::two_sided}) {
          const auto got = enumerate_ideals(*m, side);
          CHECK_MESSAGE(got == brute_ideals(n, t, u, side), "n=" << n << " t=" << t << " u=" << u);
          for (const auto& i : got) CHECK(is_ideal(*m, i, side));
        }
      }
}

TEST_CASE("left and right ideals swap with t and u") {
  const auto a = zn_groupoid(12, 3, 5).magma();
  const auto b = zn_groupoid(12, 5, 3).magma();
  CHECK(enumerate_ideals(*a, Side::left) == enumerate_ideals(*b, Side::right));
}

TEST_CASE("simplicity") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) CHECK(is_simple(zn_group(p), SimpleMode::substructure));
  CHECK_FALSE(is_simple(zn_group(6), SimpleMode::substructure));
  CHECK(is_simple(product({zn_group(11), zn_group(17)}), SimpleMode::substructure));
  CHECK_FALSE(is_simple(product({zn_group(4), zn_group(6)}), SimpleMode::substructure));
  CHECK(is_simple(zn_semigroup(7, ZnOp::mul), SimpleMode::ideal));
  CHECK_FALSE(is_simple(zn_semigroup(6, ZnOp::mul), SimpleMode::ideal));
}

TEST_CASE("substructure enumeration of Z_12") {
  const auto m = zn_group(12).magma();
  const auto e = enumerate_substructures(*m);
  std::vector<std::size_t> sizes;
  for (const auto& s : e.found) sizes.push_back(s.size());
  CHECK(sizes == std::vector<std::size_t>{2, 3, 4, 6});
  for (const auto& s : e.found) CHECK(proper_nontrivial(*m, s.members));
}

TEST_CASE("Lagrange fails for (Z_16, x) x U(7)") {
  const auto s = product({zn_semigroup(16, ZnOp::mul, Flavor::plain), units_group(7)});
  EnumerationOptions opts;
  opts.max_seed = 4;
  const auto r = lagrange_audit(s, opts);
  CHECK(r.structure_order == 96);
  CHECK(r.grade != LagrangeGrade::lagrange);
  const auto m0 = s.component_magma(0);
  bool found = false;
  for (const auto& e : r.entries) {
    CHECK(e.divides == (96 % e.order == 0));
    if (e.sub.parts[0].members == std::vector<Index>{0, 1, 4, 8, 12}) found = true;
  }
  CHECK(found);
  CHECK(closure(*m0, {1, 4, 8, 12}) == std::vector<Index>{0, 1, 4, 8, 12});
}

TEST_CASE("Sylow audit of Z_12") {
  const auto r = sylow_audit(zn_group(12), 2);
  CHECK(r.max_k == 2);
  CHECK(r.divides);
  CHECK(r.maximal);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].parts[0].members == std::vector<Index>{0, 3, 6, 9});
}

TEST_CASE("Smarandache witnesses") {
  const auto w = smarandache_witness(zn_semigroup(10, ZnOp::mul));
  CHECK(w.grade == WitnessGrade::smarandache);
  REQUIRE(w.parts.size() == 1);
  REQUIRE(w.parts[0]);
  CHECK(w.parts[0]->cls.label == ClassLabel::group);
  const auto q = smarandache_witness(product({zn_semigroup(10, ZnOp::mul), zn_groupoid(5, 2, 3)}));
  CHECK(q.parts.size() == 2);
}

}
