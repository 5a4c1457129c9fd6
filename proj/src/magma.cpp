#include "ialg/magma.hpp"

#include <algorithm>
#include <limits>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

namespace {

Index narrow_order(const Carrier& carrier) {
  const std::uint64_t n = carrier.checked_size();
  if (n > std::numeric_limits<Index>::max()) {
    throw Error(ErrorKind::OrderTooLarge, carrier.describe() + " is too large to index");
  }
  return static_cast<Index>(n);
}

std::function<Index(Index, Index)> residue_op(const OpRule& rule, std::int64_t n) {
  if (rule.get_if<OpRule::AddMod>()) {
    return [n](Index a, Index b) { return static_cast<Index>(addmod(a, b, n)); };
  }
  if (rule.get_if<OpRule::MulMod>()) {
    return [n](Index a, Index b) { return static_cast<Index>(mulmod(a, b, n)); };
  }
  if (auto g = rule.get_if<OpRule::GroupoidPair>()) {
    const std::int64_t t = mod(g->t, n);
    const std::int64_t u = mod(g->u, n);
    return [n, t, u](Index a, Index b) {
      return static_cast<Index>(addmod(mulmod(t, a, n), mulmod(u, b, n), n));
    };
  }
  return nullptr;
}

std::function<Index(Index, Index)> units_op(const OpRule& rule, std::int64_t n) {
  auto residues = std::make_shared<const std::vector<std::int64_t>>(unit_residues(n));
  auto slot = std::make_shared<std::vector<Index>>(static_cast<std::size_t>(n), Index(-1));
  for (std::size_t i = 0; i < residues->size(); ++i) (*slot)[(*residues)[i]] = static_cast<Index>(i);
  auto inner = residue_op(rule, n);
  if (!inner) return nullptr;
  return [residues, slot, inner, n](Index a, Index b) {
    const Index r = inner(static_cast<Index>((*residues)[a]), static_cast<Index>((*residues)[b]));
    const Index i = (*slot)[r];
    if (i == Index(-1)) {
      throw Error(ErrorKind::ClosureViolation,
                  "product " + std::to_string(r) + " is not a unit modulo " + std::to_string(n));
    }
    return i;
  };
}

std::function<Index(Index, Index)> maps_op(unsigned k, bool bijective) {
  if (bijective) {
    return [k](Index a, Index b) {
      const auto f = permutation_unrank(a, k);
      const auto g = permutation_unrank(b, k);
      std::vector<std::uint8_t> h(k);
      for (unsigned i = 0; i < k; ++i) h[i] = g[f[i] - 1u];
      return static_cast<Index>(permutation_rank(h));
    };
  }
  // Base-k digits, first image most significant.
  return [k](Index a, Index b) {
    std::uint8_t f[8];
    std::uint8_t g[8];
    for (unsigned i = k; i-- > 0;) {
      f[i] = static_cast<std::uint8_t>(a % k);
      g[i] = static_cast<std::uint8_t>(b % k);
      a /= k;
      b /= k;
    }
    Index r = 0;
    for (unsigned i = 0; i < k; ++i) r = r * k + g[f[i]];
    return r;
  };
}

}  // namespace

Magma::Magma(Index order, std::function<Index(Index, Index)> op) : order_(order), op_(std::move(op)) {}

MagmaPtr Magma::from_rule(const Carrier& carrier, const OpRule& rule, Flavor flavor) {
  const Index n = narrow_order(carrier);
  std::function<Index(Index, Index)> op;
  if (auto z = carrier.get_if<Carrier::Zmod>()) {
    op = residue_op(rule, z->n);
  } else if (auto u = carrier.get_if<Carrier::ZmodUnits>()) {
    op = units_op(rule, u->n);
  } else if (auto l = carrier.get_if<Carrier::LoopSet>()) {
    if (auto lr = rule.get_if<OpRule::LoopRule>()) {
      const std::uint32_t ambient = l->n;
      const std::int64_t m = lr->m;
      op = [ambient, m](Index a, Index b) { return loop_product(ambient, m, a, b); };
    }
  } else if (auto mp = carrier.get_if<Carrier::Maps>()) {
    if (rule.get_if<OpRule::Compose>()) op = maps_op(mp->k, mp->bijective);
  } else if (auto mx = carrier.get_if<Carrier::MatrixOf>()) {
    auto e = rule.get_if<OpRule::EntrywiseOf>();
    auto z = mx->inner->get_if<Carrier::Zmod>();
    if (e && z) {
      auto cell = residue_op(*e->inner, z->n);
      if (cell) {
        const std::size_t cells = mx->rows * mx->cols;
        const auto base = static_cast<Index>(z->n);
        op = [cell, cells, base](Index a, Index b) {
          Index digits_a[64];
          Index digits_b[64];
          for (std::size_t i = cells; i-- > 0;) {
            digits_a[i] = a % base;
            digits_b[i] = b % base;
            a /= base;
            b /= base;
          }
          Index r = 0;
          for (std::size_t i = 0; i < cells; ++i) r = r * base + cell(digits_a[i], digits_b[i]);
          return r;
        };
        if (cells > 64) op = nullptr;
      }
    }
  }
  if (!op) {
    // Generic path through elements; used for matrix products and tuples.
    auto c = std::make_shared<const Carrier>(carrier);
    auto r = std::make_shared<const OpRule>(rule);
    op = [c, r](Index a, Index b) {
      const Element x = apply(*r, *c, c->element_at(a), c->element_at(b));
      return static_cast<Index>(c->index_of(x));
    };
  }
  auto magma = std::make_shared<Magma>(n, std::move(op));
  magma->carrier_ = carrier;
  magma->rule_ = rule;
  magma->flavor_ = flavor;
  return magma;
}

MagmaPtr Magma::product(std::vector<MagmaPtr> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "product of no components");
  std::uint64_t n = 1;
  for (const auto& p : parts) {
    n *= p->order();
    if (n > max_order() || n > std::numeric_limits<Index>::max()) {
      throw Error(ErrorKind::OrderTooLarge,
                  "product order exceeds the cap of " + std::to_string(max_order()));
    }
  }
  auto shared_parts = std::make_shared<const std::vector<MagmaPtr>>(parts);
  auto op = [shared_parts](Index a, Index b) {
    const auto& ps = *shared_parts;
    Index digits_a[32];
    Index digits_b[32];
    const std::size_t k = ps.size();
    for (std::size_t i = k; i-- > 0;) {
      const Index base = ps[i]->order();
      digits_a[i] = a % base;
      digits_b[i] = b % base;
      a /= base;
      b /= base;
    }
    Index r = 0;
    for (std::size_t i = 0; i < k; ++i) r = r * ps[i]->order() + ps[i]->op(digits_a[i], digits_b[i]);
    return r;
  };
  if (parts.size() > 32) throw Error(ErrorKind::InvalidArgument, "at most 32 components");
  auto magma = std::make_shared<Magma>(static_cast<Index>(n), std::move(op));
  bool all_carriers = true;
  std::vector<Carrier> carriers;
  std::vector<OpRule> rules;
  for (const auto& p : parts) {
    if (!p->carrier_ || !p->rule_) {
      all_carriers = false;
      break;
    }
    carriers.push_back(*p->carrier_);
    rules.push_back(*p->rule_);
  }
  if (all_carriers) {
    magma->carrier_ = Carrier::tuple(std::move(carriers));
    magma->rule_ = OpRule::componentwise(std::move(rules));
  }
  magma->flavor_ = parts.front()->flavor_;
  magma->parts_ = std::move(parts);
  return magma;
}

MagmaPtr Magma::from_table(CayleyTable table, std::vector<std::string> labels) {
  if (labels.size() != table.order ||
      table.cells.size() != static_cast<std::size_t>(table.order) * table.order) {
    throw Error(ErrorKind::InvalidArgument, "table and labels disagree in size");
  }
  auto cells = std::make_shared<const std::vector<Index>>(table.cells);
  const Index n = table.order;
  auto magma = std::make_shared<Magma>(n, [cells, n](Index a, Index b) {
    return (*cells)[static_cast<std::size_t>(a) * n + b];
  });
  magma->fixed_labels_ = std::move(labels);
  return magma;
}

MagmaPtr Magma::restrict_to(const std::vector<Index>& members) const {
  const auto k = static_cast<Index>(members.size());
  std::vector<Index> position(order_, Index(-1));
  for (Index i = 0; i < k; ++i) position[members[i]] = i;
  CayleyTable t{k, std::vector<Index>(static_cast<std::size_t>(k) * k)};
  std::vector<std::string> names;
  names.reserve(k);
  for (Index i = 0; i < k; ++i) {
    names.push_back(label(members[i]));
    for (Index j = 0; j < k; ++j) {
      const Index p = position[op(members[i], members[j])];
      if (p == Index(-1)) throw Error(ErrorKind::ClosureViolation, "subset is not closed");
      t.cells[static_cast<std::size_t>(i) * k + j] = p;
    }
  }
  return from_table(std::move(t), std::move(names));
}

Index Magma::op(Index a, Index b) const {
  return op_(a, b);
}

const CayleyTable& Magma::table() const {
  std::call_once(table_once_, [this] {
    CayleyTable t{order_, std::vector<Index>(static_cast<std::size_t>(order_) * order_)};
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) t.cells[static_cast<std::size_t>(a) * order_ + b] = op_(a, b);
    }
    table_ = std::move(t);
  });
  return table_;
}

const CayleyTable* Magma::table_if_small() const {
  if (order_ > kTableLimit) return nullptr;
  return &table();
}

std::string Magma::label(Index i) const {
  if (i >= order_) throw Error(ErrorKind::CarrierMismatch, "index " + std::to_string(i) + " out of range");
  if (!fixed_labels_.empty()) return fixed_labels_[i];
  if (!parts_.empty()) {
    const auto c = split(i);
    std::string out = "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ", ";
      out += parts_[k]->label(c[k]);
    }
    return out + ")";
  }
  return ialg::label(element(i), flavor_);
}

std::vector<std::string> Magma::labels() const {
  std::vector<std::string> out;
  out.reserve(order_);
  for (Index i = 0; i < order_; ++i) out.push_back(label(i));
  return out;
}

Element Magma::element(Index i) const {
  if (!carrier_) throw Error(ErrorKind::UnsupportedBase, "magma has no element carrier");
  return carrier_->element_at(i);
}

Index Magma::index_of(const Element& e) const {
  if (!carrier_) throw Error(ErrorKind::UnsupportedBase, "magma has no element carrier");
  return static_cast<Index>(carrier_->index_of(e));
}

std::vector<Index> Magma::split(Index i) const {
  std::vector<Index> out(parts_.size());
  for (std::size_t k = parts_.size(); k-- > 0;) {
    out[k] = i % parts_[k]->order();
    i /= parts_[k]->order();
  }
  return out;
}

Index Magma::join(const std::vector<Index>& components) const {
  if (components.size() != parts_.size()) throw Error(ErrorKind::ArityMismatch, "component count differs");
  Index r = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) r = r * parts_[k]->order() + components[k];
  return r;
}

}  // namespace ialg
