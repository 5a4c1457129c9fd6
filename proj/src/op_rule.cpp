#include "ialg/op_rule.hpp"

#include <cmath>
#include <limits>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

std::string OpRule::describe() const {
  struct Visitor {
    std::string operator()(const AddMod&) const { return "+"; }
    std::string operator()(const MulMod&) const { return "x"; }
    std::string operator()(const GroupoidPair& g) const {
      return "(" + std::to_string(g.t) + "," + std::to_string(g.u) + ")";
    }
    std::string operator()(const LoopRule& l) const { return "loop m=" + std::to_string(l.m); }
    std::string operator()(const Compose&) const { return "compose"; }
    std::string operator()(const EntrywiseOf& e) const { return "entrywise " + e.inner->describe(); }
    std::string operator()(const MatrixMulMod& m) const { return "matmul mod " + std::to_string(m.n); }
    std::string operator()(const Componentwise& c) const {
      std::string out = "[";
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) out += "; ";
        out += c.parts[i].describe();
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, kind);
}

namespace {

[[noreturn]] void unsupported(const OpRule& rule, const Carrier& carrier) {
  throw Error(ErrorKind::UnsupportedBase,
              "rule " + rule.describe() + " is not defined on " + carrier.describe());
}

void require_member(const Carrier& carrier, const Element& e) {
  if (!carrier.contains(e)) {
    throw Error(ErrorKind::CarrierMismatch, label(e) + " is not an element of " + carrier.describe());
  }
}

std::int64_t checked(std::int64_t a, std::int64_t b, bool multiply) {
  std::int64_t r = 0;
  const bool overflow = multiply ? __builtin_mul_overflow(a, b, &r) : __builtin_add_overflow(a, b, &r);
  if (overflow) throw Error(ErrorKind::OrderTooLarge, "integer overflow in unbounded arithmetic");
  return r;
}

Rational rat_add(Rational a, Rational b) {
  return Rational::of(checked(checked(a.num, b.den, true), checked(b.num, a.den, true), false),
                      checked(a.den, b.den, true));
}

Rational rat_mul(Rational a, Rational b) {
  return Rational::of(checked(a.num, b.num, true), checked(a.den, b.den, true));
}

Element unbounded_apply(const OpRule& rule, NumberField field, const NonnegNumber& a,
                        const NonnegNumber& b) {
  if (field == NumberField::reals) {
    double r = 0;
    if (rule.get_if<OpRule::AddMod>()) {
      r = a.real + b.real;
    } else if (rule.get_if<OpRule::MulMod>()) {
      r = a.real * b.real;
    } else if (auto g = rule.get_if<OpRule::GroupoidPair>()) {
      r = static_cast<double>(g->t) * a.real + static_cast<double>(g->u) * b.real;
    } else {
      throw Error(ErrorKind::UnsupportedBase, "rule " + rule.describe() + " on reals");
    }
    return {NonnegNumber{field, 0, 1, r}};
  }
  const Rational x{a.num, a.den};
  const Rational y{b.num, b.den};
  Rational r;
  if (rule.get_if<OpRule::AddMod>()) {
    r = rat_add(x, y);
  } else if (rule.get_if<OpRule::MulMod>()) {
    r = rat_mul(x, y);
  } else if (auto g = rule.get_if<OpRule::GroupoidPair>()) {
    r = rat_add(rat_mul(Rational{g->t, 1}, x), rat_mul(Rational{g->u, 1}, y));
  } else {
    throw Error(ErrorKind::UnsupportedBase, "rule " + rule.describe() + " on unbounded numbers");
  }
  return {NonnegNumber{field, r.num, r.den, 0.0}};
}

Element modular_apply(const OpRule& rule, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (rule.get_if<OpRule::AddMod>()) return Element::mod(addmod(a, b, n), n);
  if (rule.get_if<OpRule::MulMod>()) return Element::mod(mulmod(a, b, n), n);
  if (auto g = rule.get_if<OpRule::GroupoidPair>()) {
    return Element::mod(addmod(mulmod(mod(g->t, n), a, n), mulmod(mod(g->u, n), b, n), n), n);
  }
  throw Error(ErrorKind::UnsupportedBase, "rule " + rule.describe() + " on residues");
}

}  // namespace

Element apply(const OpRule& rule, const Carrier& carrier, const Element& a, const Element& b) {
  require_member(carrier, a);
  require_member(carrier, b);
  Element result;
  if (auto z = carrier.get_if<Carrier::Zmod>()) {
    result = modular_apply(rule, z->n, a.as<ModInterval>().value, b.as<ModInterval>().value);
  } else if (auto u = carrier.get_if<Carrier::ZmodUnits>()) {
    result = modular_apply(rule, u->n, a.as<ModInterval>().value, b.as<ModInterval>().value);
  } else if (auto l = carrier.get_if<Carrier::LoopSet>()) {
    auto lr = rule.get_if<OpRule::LoopRule>();
    if (!lr) unsupported(rule, carrier);
    result = Element::loop(loop_product(l->n, lr->m, a.as<LoopPoint>().point, b.as<LoopPoint>().point),
                           l->n);
  } else if (auto ub = carrier.get_if<Carrier::UnboundedNonneg>()) {
    result = unbounded_apply(rule, ub->field, a.as<NonnegNumber>(), b.as<NonnegNumber>());
  } else if (carrier.get_if<Carrier::Maps>()) {
    if (!rule.get_if<OpRule::Compose>()) unsupported(rule, carrier);
    const auto& f = a.as<MapElement>().images;
    const auto& g = b.as<MapElement>().images;
    std::vector<std::uint8_t> images(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) images[i] = g[f[i] - 1u];
    result = Element::map(std::move(images));
  } else if (auto m = carrier.get_if<Carrier::MatrixOf>()) {
    const auto& x = a.as<MatrixElement>();
    const auto& y = b.as<MatrixElement>();
    if (auto e = rule.get_if<OpRule::EntrywiseOf>()) {
      std::vector<Element> cells;
      cells.reserve(x.cells.size());
      for (std::size_t i = 0; i < x.cells.size(); ++i) {
        cells.push_back(apply(*e->inner, *m->inner, x.cells[i], y.cells[i]));
      }
      result = Element::matrix(x.rows, x.cols, std::move(cells));
    } else if (auto mm = rule.get_if<OpRule::MatrixMulMod>()) {
      const auto* inner = m->inner->get_if<Carrier::Zmod>();
      if (!inner || inner->n != mm->n) unsupported(rule, carrier);
      if (x.rows != x.cols) throw Error(ErrorKind::NonSquareMul, "matrix product needs square matrices");
      const std::size_t k = x.rows;
      std::vector<Element> cells;
      cells.reserve(k * k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          std::int64_t acc = 0;
          for (std::size_t i = 0; i < k; ++i) {
            acc = addmod(acc,
                         mulmod(x.cells[r * k + i].as<ModInterval>().value,
                                y.cells[i * k + c].as<ModInterval>().value, mm->n),
                         mm->n);
          }
          cells.push_back(Element::mod(acc, mm->n));
        }
      }
      result = Element::matrix(k, k, std::move(cells));
    } else {
      unsupported(rule, carrier);
    }
  } else {
    const auto& t = std::get<Carrier::TupleOf>(carrier.kind);
    auto cw = rule.get_if<OpRule::Componentwise>();
    if (!cw || cw->parts.size() != t.parts.size()) {
      throw Error(ErrorKind::ArityMismatch, "componentwise rule arity differs from the tuple carrier");
    }
    const auto& x = a.as<TupleElement>();
    const auto& y = b.as<TupleElement>();
    std::vector<Element> parts;
    parts.reserve(t.parts.size());
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
      parts.push_back(apply(cw->parts[i], t.parts[i], x.parts[i], y.parts[i]));
    }
    result = Element::tuple(std::move(parts));
  }
  if (!carrier.contains(result)) {
    throw Error(ErrorKind::ClosureViolation,
                label(a) + " * " + label(b) + " = " + label(result) + " leaves " + carrier.describe());
  }
  return result;
}

}  // namespace ialg
