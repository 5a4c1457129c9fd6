#include <doctest.h>

#include "ialg/constructors.hpp"
#include "ialg/error.hpp"

using namespace ialg;

namespace {

std::string error_text(const std::function<void()>& f, ErrorKind want) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == want);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("zn structures classify as expected") {
  CHECK(classify(*zn_semigroup(24, ZnOp::mul).magma()).label == ClassLabel::monoid);
  CHECK(classify(*zn_group(9).magma()).label == ClassLabel::group);
  CHECK(classify(*units_group(11).magma()).label == ClassLabel::group);
  CHECK(order_of(units_group(11)) == 10);
  CHECK(classify(*zn_groupoid(12, 3, 9).magma()).label == ClassLabel::groupoid);
  CHECK(classify(*zn_groupoid(7, 1, 0).magma()).label == ClassLabel::semigroup);
}

TEST_CASE("groupoid parameters are reduced residues") {
  const auto g = zn_groupoid(10, 13, -1);
  CHECK(g.name() == "Z_10(3,9)");
  error_text([] { zn_groupoid(10, Rational::of(1, 2), Rational::of(3)); }, ErrorKind::NonResiduePair);
  CHECK(zn_groupoid(10, Rational::of(6, 2), Rational::of(9)).name() == "Z_10(3,9)");
}

TEST_CASE("unbounded carriers are element-level only") {
  const auto g = unbounded_groupoid(NumberField::integers, 7, 10);
  CHECK_FALSE(g.finite());
  CHECK(g.apply(Element::integer(20), Element::integer(1)) == Element::integer(150));
  error_text([&] { (void)g.magma(); }, ErrorKind::InfiniteCarrier);
}

TEST_CASE("loop parameters") {
  CHECK(valid_loop_multipliers(5) == std::vector<std::int64_t>{2, 3, 4});
  CHECK(valid_loop_multipliers(9) == std::vector<std::int64_t>{2, 5, 8});
  CHECK(valid_loop_multipliers(15) == std::vector<std::int64_t>{2, 8, 14});
  CHECK(error_text([] { new_loop(9, 3); }, ErrorKind::BadLoopParams).find("gcd(m, n) = 3") != std::string::npos);
  CHECK(error_text([] { new_loop(21, 8); }, ErrorKind::BadLoopParams).find("gcd(m - 1, n) = 7") != std::string::npos);
  error_text([] { new_loop(8, 3); }, ErrorKind::BadLoopParams);
  error_text([] { new_loop(7, 7); }, ErrorKind::BadLoopParams);
  const auto l = new_loop(21, 8, Flavor::interval, LoopCheck::formula_only);
  CHECK(order_of(l) == 22);
  CHECK(classify(*new_loop(7, 3).magma()).label == ClassLabel::loop);
}

TEST_CASE("symmetric groups and transformation monoids") {
  CHECK(order_of(sym_structure(3, true)) == 6);
  CHECK(classify(*sym_structure(3, true).magma()).label == ClassLabel::group);
  CHECK(order_of(sym_structure(4, false)) == 256);
  CHECK(classify(*sym_structure(3, false).magma()).label == ClassLabel::monoid);
  error_text([] { sym_structure(8, true); }, ErrorKind::DegreeTooLarge);
}

TEST_CASE("matrix structures") {
  const auto base = zn_groupoid(12, 7, 0);
  const auto m = matrix_structure(3, 3, base, MatrixMode::entrywise);
  CHECK(m.components()[0].carrier.size() == 5159780352ULL);  // 12^9
  CHECK(order_of(matrix_structure(2, 2, zn_semigroup(3, ZnOp::add), MatrixMode::mul)) == 81);
  error_text([&] { matrix_structure(2, 3, zn_semigroup(3, ZnOp::add), MatrixMode::mul); }, ErrorKind::NonSquareMul);
  error_text([] { matrix_structure(2, 2, new_loop(5, 2), MatrixMode::entrywise); }, ErrorKind::UnsupportedBase);
}

TEST_CASE("products") {
  const auto s = product({zn_group(13), zn_semigroup(16, ZnOp::mul)});
  CHECK(order_of(s) == 208);
  CHECK(structure_label(s) == "group × monoid");
  const auto x = Element::tuple({Element::mod(10, 13), Element::mod(14, 16)});
  const auto y = Element::tuple({Element::mod(7, 13), Element::mod(10, 16)});
  CHECK(s.apply(x, y) == Element::tuple({Element::mod(4, 13), Element::mod(12, 16)}));
  CHECK(structure_label(product({zn_group(5, Flavor::plain), zn_group(7)})) == "quasi group × group");
  error_text([] { product({zn_group(5)}); }, ErrorKind::ArityMismatch);
  error_text([&] { product({s, zn_group(3)}); }, ErrorKind::ArityMismatch);
}

TEST_CASE("product with an inverse") {
  const auto s = product({zn_group(10), units_group(11)});
  const auto m = s.magma();
  const auto x = m->index_of(Element::tuple({Element::mod(6, 10), Element::mod(3, 11)}));
  const auto inv = m->index_of(Element::tuple({Element::mod(4, 10), Element::mod(4, 11)}));
  const auto e = identity_of(*m);
  REQUIRE(e);
  CHECK(m->label(*e) == "([0,0], [0,1])");
  CHECK(m->op(x, inv) == *e);
  const auto a = m->index_of(Element::tuple({Element::mod(9, 10), Element::mod(2, 11)}));
  const auto b = m->index_of(Element::tuple({Element::mod(4, 10), Element::mod(7, 11)}));
  CHECK(m->label(m->op(a, b)) == "([0,3], [0,3])");
}

TEST_CASE("left powers and orders") {
  const auto m = zn_group(12).magma();
  CHECK(left_power(*m, 5, 3) == 3);
  CHECK(element_order(*m, 4) == 3u);
  CHECK(element_order(*m, 0) == 1u);
  const auto g = zn_groupoid(5, 2, 3).magma();
  error_text([&] { (void)element_order(*g, 1); }, ErrorKind::NoIdentity);
}

}
