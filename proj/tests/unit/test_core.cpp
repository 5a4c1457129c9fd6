#include <doctest.h>

#include "ialg/carrier.hpp"
#include "ialg/error.hpp"
#include "ialg/magma.hpp"
#include "ialg/op_rule.hpp"

using namespace ialg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("labels follow the flavor") {
  CHECK(label(Element::mod(4, 12)) == "[0,4]");
  CHECK(label(Element::mod(4, 12), Flavor::plain) == "4");
  CHECK(label(Element::loop_identity(5)) == "[0,e]");
  CHECK(label(Element::loop(3, 5), Flavor::plain) == "3");
  CHECK(label(Element::map({3, 1, 2})) == "<3 1 2>");
  CHECK(label(Element::tuple({Element::mod(1, 2), Element::mod(0, 3)})) == "([0,1], [0,0])");
  CHECK(label(Element::matrix(2, 2, {Element::mod(1, 5), Element::mod(2, 5), Element::mod(3, 5), Element::mod(4, 5)}),
              Flavor::plain) == "(1 2; 3 4)");
}

TEST_CASE("carrier order and indexing agree") {
  const auto units = Carrier::units(12);
  CHECK(units.size() == 4);
  CHECK(units.element_at(2) == Element::mod(7, 12));
  CHECK(Carrier::loop_set(7).size() == 8);
  CHECK(Carrier::maps(3, true).size() == 6);
  CHECK(Carrier::maps(3, false).size() == 27);
  CHECK(Carrier::maps(3, true).element_at(0) == Element::map({1, 2, 3}));
  CHECK(Carrier::maps(3, true).element_at(5) == Element::map({3, 2, 1}));

  const auto t = Carrier::tuple({Carrier::zmod(3), Carrier::zmod(4), Carrier::loop_set(5)});
  CHECK(t.size() == 72);
  for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(t.index_of(t.element_at(i)) == i);
  // First component most significant.
  CHECK(t.element_at(24) == Element::tuple({Element::mod(1, 3), Element::mod(0, 4), Element::loop_identity(5)}));

  const auto m = Carrier::matrix(2, 2, Carrier::zmod(3));
  CHECK(m.size() == 81);
  CHECK(m.element_at(1) ==
        Element::matrix(2, 2, {Element::mod(0, 3), Element::mod(0, 3), Element::mod(0, 3), Element::mod(1, 3)}));

  CHECK(kind_of([] { (void)Carrier::unbounded(NumberField::integers).size(); }) == ErrorKind::InfiniteCarrier);
  CHECK(kind_of([] { (void)Carrier::units(10).index_of(Element::mod(2, 10)); }) == ErrorKind::CarrierMismatch);
}

TEST_CASE("groupoid products on residues") {
  const auto z7 = Carrier::zmod(7);
  CHECK(apply(OpRule::groupoid(2, 3), z7, Element::mod(3, 7), Element::mod(2, 7)) == Element::mod(5, 7));
  const auto z20 = Carrier::zmod(20);
  CHECK(apply(OpRule::groupoid(3, 9), z20, Element::mod(3, 20), Element::mod(1, 20)) == Element::mod(18, 20));
  const auto z14 = Carrier::zmod(14);
  CHECK(apply(OpRule::groupoid(2, 11), z14, Element::mod(7, 14), Element::mod(13, 14)) == Element::mod(3, 14));
}

TEST_CASE("unbounded integers keep exact values") {
  const auto zplus = Carrier::unbounded(NumberField::integers);
  CHECK(apply(OpRule::groupoid(7, 10), zplus, Element::integer(20), Element::integer(1)) == Element::integer(150));
  CHECK(apply(OpRule::mul(), zplus, Element::integer(12), Element::integer(12)) == Element::integer(144));
  CHECK(kind_of([&] {
          (void)apply(OpRule::mul(), zplus, Element::integer(INT64_MAX), Element::integer(2));
        }) != ErrorKind::InvalidArgument);
}

TEST_CASE("loop rule") {
  // i * j = m j - (m - 1) i (mod n), 0 read as n.
  CHECK(loop_product(5, 2, 2, 1) == 5);
  CHECK(loop_product(5, 2, 2, 4) == 1);
  CHECK(loop_product(5, 2, 3, 3) == 0);
  CHECK(loop_product(5, 2, 0, 4) == 4);
  CHECK(loop_product(7, 3, 1, 2) == 4);
}

TEST_CASE("left-to-right composition") {
  const auto s3 = Carrier::maps(3, true);
  const auto f = Element::map({2, 3, 1});
  const auto g = Element::map({2, 1, 3});
  // (f g)(1) = g(f(1)) = g(2) = 1
  CHECK(apply(OpRule::compose(), s3, f, g) == Element::map({1, 3, 2}));
}

TEST_CASE("matrix rules") {
  const auto c = Carrier::matrix(2, 2, Carrier::zmod(5));
  const auto a = Element::matrix(2, 2, {Element::mod(1, 5), Element::mod(2, 5), Element::mod(3, 5), Element::mod(4, 5)});
  CHECK(apply(OpRule::matrix_mul(5), c, a, a) ==
        Element::matrix(2, 2, {Element::mod(2, 5), Element::mod(0, 5), Element::mod(0, 5), Element::mod(2, 5)}));
  CHECK(apply(OpRule::entrywise(OpRule::add()), c, a, a) ==
        Element::matrix(2, 2, {Element::mod(2, 5), Element::mod(4, 5), Element::mod(1, 5), Element::mod(3, 5)}));
  const auto wide = Carrier::matrix(1, 2, Carrier::zmod(5));
  const auto w = Element::matrix(1, 2, {Element::mod(1, 5), Element::mod(2, 5)});
  CHECK(kind_of([&] { (void)apply(OpRule::matrix_mul(5), wide, w, w); }) == ErrorKind::NonSquareMul);
}

TEST_CASE("operation errors") {
  const auto z5 = Carrier::zmod(5);
  CHECK(kind_of([&] { (void)apply(OpRule::add(), z5, Element::mod(1, 6), Element::mod(1, 5)); }) ==
        ErrorKind::CarrierMismatch);
  CHECK(kind_of([&] { (void)apply(OpRule::add(), Carrier::units(6), Element::mod(1, 6), Element::mod(1, 6)); }) ==
        ErrorKind::ClosureViolation);
  CHECK(kind_of([&] { (void)apply(OpRule::compose(), z5, Element::mod(1, 5), Element::mod(1, 5)); }) ==
        ErrorKind::UnsupportedBase);
}

TEST_CASE("magma table matches the element-level rule") {
  const auto c = Carrier::zmod(12);
  for (const auto& rule : {OpRule::add(), OpRule::mul(), OpRule::groupoid(7, 6)}) {
    const auto m = Magma::from_rule(c, rule, Flavor::interval);
    for (Index a = 0; a < m->order(); ++a) {
      for (Index b = 0; b < m->order(); ++b) {
        CHECK(m->element(m->op(a, b)) == apply(rule, c, m->element(a), m->element(b)));
      }
    }
  }
}

TEST_CASE("product magma split and join") {
  const auto a = Magma::from_rule(Carrier::zmod(13), OpRule::add(), Flavor::interval);
  const auto b = Magma::from_rule(Carrier::zmod(16), OpRule::mul(), Flavor::interval);
  const auto p = Magma::product({a, b});
  CHECK(p->order() == 208);
  const auto x = p->join({10, 14});
  const auto y = p->join({7, 10});
  CHECK(p->split(p->op(x, y)) == std::vector<Index>{4, 12});
  CHECK(p->label(p->op(x, y)) == "([0,4], [0,12])");
  for (Index i = 0; i < p->order(); ++i) CHECK(p->join(p->split(i)) == i);
}

TEST_CASE("restriction and table magmas") {
  const auto z12 = Magma::from_rule(Carrier::zmod(12), OpRule::mul(), Flavor::interval);
  const auto sub = z12->restrict_to({1, 5, 7, 11});
  CHECK(sub->order() == 4);
  CHECK(sub->label(sub->op(1, 2)) == "[0,11]");
  const auto t = Magma::from_table(CayleyTable{2, {0, 1, 1, 0}}, {"a", "b"});
  CHECK(t->op(1, 1) == 0);
  CHECK(t->label(1) == "b");
}

}
