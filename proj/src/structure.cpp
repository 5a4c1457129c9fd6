#include "ialg/structure.hpp"

#include <mutex>

#include "ialg/error.hpp"
#include "ialg/kernels.hpp"

namespace ialg {

struct Structure::Cache {
  std::mutex lock;
  std::vector<MagmaPtr> parts;
  MagmaPtr whole;
};

Structure::Structure(std::string name, std::vector<Component> components)
    : name_(std::move(name)), components_(std::move(components)), cache_(std::make_shared<Cache>()) {
  if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "a structure needs a component");
  cache_->parts.resize(components_.size());
}

bool Structure::finite() const {
  for (const auto& c : components_) {
    if (!c.carrier.enumerable()) return false;
  }
  return true;
}

MagmaPtr Structure::component_magma(std::size_t i) const {
  if (i >= components_.size()) throw Error(ErrorKind::ArityMismatch, "no component " + std::to_string(i + 1));
  std::lock_guard<std::mutex> guard(cache_->lock);
  auto& slot = cache_->parts[i];
  if (!slot) {
    const auto& c = components_[i];
    if (!c.carrier.enumerable()) {
      throw Error(ErrorKind::InfiniteCarrier, c.carrier.describe() + " cannot be enumerated");
    }
    slot = Magma::from_rule(c.carrier, c.rule, c.flavor);
  }
  return slot;
}

MagmaPtr Structure::magma() const {
  if (components_.size() == 1) return component_magma(0);
  std::vector<MagmaPtr> parts;
  for (std::size_t i = 0; i < components_.size(); ++i) parts.push_back(component_magma(i));
  std::lock_guard<std::mutex> guard(cache_->lock);
  if (!cache_->whole) cache_->whole = Magma::product(std::move(parts));
  return cache_->whole;
}

Element Structure::apply(const Element& a, const Element& b) const {
  if (components_.size() == 1) return ialg::apply(components_[0].rule, components_[0].carrier, a, b);
  if (!a.is<TupleElement>() || !b.is<TupleElement>()) {
    throw Error(ErrorKind::CarrierMismatch, "product elements must be tuples");
  }
  const auto& x = a.as<TupleElement>().parts;
  const auto& y = b.as<TupleElement>().parts;
  if (x.size() != components_.size() || y.size() != components_.size()) {
    throw Error(ErrorKind::CarrierMismatch, "tuple arity differs from the component count");
  }
  std::vector<Element> parts;
  parts.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    parts.push_back(ialg::apply(components_[i].rule, components_[i].carrier, x[i], y[i]));
  }
  return Element::tuple(std::move(parts));
}

std::uint64_t order_of(const Structure& s) {
  std::uint64_t n = 1;
  for (const auto& c : s.components()) {
    const auto k = c.carrier.size();
    if (__builtin_mul_overflow(n, k, &n)) throw Error(ErrorKind::OrderTooLarge, "order overflows 64 bits");
  }
  return n;
}

std::string_view to_string(ClassLabel label) noexcept {
  switch (label) {
    case ClassLabel::groupoid: return "groupoid";
    case ClassLabel::semigroup: return "semigroup";
    case ClassLabel::monoid: return "monoid";
    case ClassLabel::group: return "group";
    case ClassLabel::quasigroup: return "quasigroup";
    case ClassLabel::loop: return "loop";
  }
  return "groupoid";
}

namespace {

bool all_invertible(const Magma& m, Index e) {
  for (Index x = 0; x < m.order(); ++x) {
    bool found = false;
    for (Index y = 0; y < m.order() && !found; ++y) found = m.op(x, y) == e && m.op(y, x) == e;
    if (!found) return false;
  }
  return true;
}

}  // namespace

StructureClass classify(const Magma& m) {
  StructureClass c;
  try {
    c.closed = true;
    c.associative = !kernels::first_nonassociative(m);
    c.commutative = !kernels::first_noncommuting(m);
    c.latin_square = !kernels::first_nonlatin(m);
    const auto e = kernels::identity(m);
    c.has_identity = e.has_value();
    if (e) c.all_invertible = all_invertible(m, *e);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::ClosureViolation && err.kind() != ErrorKind::CarrierMismatch) throw;
    return StructureClass{};
  }
  c.label = label_for(c);
  return c;
}

ClassLabel label_for(const StructureClass& c) noexcept {
  if (!c.closed) return ClassLabel::groupoid;
  if (c.associative && c.has_identity && c.all_invertible) return ClassLabel::group;
  if (c.associative && c.has_identity) return ClassLabel::monoid;
  if (c.associative) return ClassLabel::semigroup;
  if (c.latin_square && c.has_identity) return ClassLabel::loop;
  if (c.latin_square) return ClassLabel::quasigroup;
  return ClassLabel::groupoid;
}

StructureClass classify(const Structure& s) {
  if (!s.is_product()) return classify(*s.component_magma(0));
  StructureClass c;
  c.closed = c.associative = c.has_identity = c.all_invertible = c.latin_square = c.commutative = true;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    const auto p = classify(*s.component_magma(i));
    c.closed = c.closed && p.closed;
    c.associative = c.associative && p.associative;
    c.has_identity = c.has_identity && p.has_identity;
    c.all_invertible = c.all_invertible && p.all_invertible;
    c.latin_square = c.latin_square && p.latin_square;
    c.commutative = c.commutative && p.commutative;
  }
  if (!c.closed) return StructureClass{};
  c.label = label_for(c);
  return c;
}

std::string structure_label(const Structure& s) {
  std::string out;
  bool interval = false;
  bool plain = false;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (i) out += " × ";
    out += to_string(classify(*s.component_magma(i)).label);
    (s.components()[i].flavor == Flavor::interval ? interval : plain) = true;
  }
  return interval && plain ? "quasi " + out : out;
}

std::optional<Index> identity_of(const Magma& m) {
  return kernels::identity(m);
}

std::optional<Index> absorbing_element(const Magma& m) {
  return kernels::absorber(m);
}

Index left_power(const Magma& m, Index x, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "powers start at 1");
  Index p = x;
  for (std::uint64_t i = 1; i < k; ++i) p = m.op(x, p);
  return p;
}

std::optional<std::uint64_t> element_order(const Magma& m, Index x) {
  const auto e = identity_of(m);
  if (!e) throw Error(ErrorKind::NoIdentity, "the structure has no identity");
  Index p = x;
  for (std::uint64_t k = 1; k <= m.order(); ++k) {
    if (p == *e) return k;
    p = m.op(x, p);
  }
  return std::nullopt;
}

}  // namespace ialg
