#include "ialg/special_elements.hpp"

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

std::string_view to_string(SpecialKind k) noexcept {
  switch (k) {
    case SpecialKind::zero_divisor: return "zero-divisors";
    case SpecialKind::unit: return "units";
    case SpecialKind::idempotent: return "idempotents";
    case SpecialKind::nilpotent: return "nilpotents";
    case SpecialKind::cauchy: return "cauchy";
  }
  return "idempotents";
}

namespace {

struct Anchors {
  std::optional<Index> identity;
  std::optional<Index> absorber;
};

Anchors anchors(const Magma& m) { return {identity_of(m), absorbing_element(m)}; }

std::optional<Index> zero_partner(const Magma& m, Index x, Index z) {
  for (Index y = 0; y < m.order(); ++y) {
    if (y != z && m.op(x, y) == z) return y;
  }
  return std::nullopt;
}

std::optional<Index> inverse(const Magma& m, Index x, Index e) {
  for (Index y = 0; y < m.order(); ++y) {
    if (m.op(x, y) == e && m.op(y, x) == e) return y;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> nil_index(const Magma& m, Index x, Index z) {
  Index p = x;
  for (std::uint64_t k = 1; k <= m.order(); ++k) {
    if (p == z) return k;
    p = m.op(x, p);
  }
  return std::nullopt;
}

// Finds the kind inside one magma; used directly for single structures and
// per component for products.
std::optional<SpecialElement> test_one(const Magma& m, const Anchors& a, SpecialKind kind, Index x,
                                       std::uint64_t structure_order) {
  SpecialElement out;
  out.element = x;
  switch (kind) {
    case SpecialKind::zero_divisor: {
      if (x == *a.absorber) return std::nullopt;
      const auto y = zero_partner(m, x, *a.absorber);
      if (!y) return std::nullopt;
      out.partner = y;
      return out;
    }
    case SpecialKind::unit: {
      const auto y = inverse(m, x, *a.identity);
      if (!y) return std::nullopt;
      out.partner = y;
      return out;
    }
    case SpecialKind::idempotent:
      if (m.op(x, x) != x) return std::nullopt;
      out.trivial = (a.identity && *a.identity == x) || (a.absorber && *a.absorber == x);
      return out;
    case SpecialKind::nilpotent: {
      if (x == *a.absorber) return std::nullopt;
      const auto k = nil_index(m, x, *a.absorber);
      if (!k) return std::nullopt;
      out.power = k;
      return out;
    }
    case SpecialKind::cauchy: {
      const auto r = element_order(m, x);
      if (!r || *r <= 1 || structure_order % *r != 0) return std::nullopt;
      out.power = r;
      return out;
    }
  }
  return std::nullopt;
}

void require_anchors(const Anchors& a, SpecialKind kind, ErrorKind missing_absorber, const std::string& where) {
  const bool needs_absorber = kind == SpecialKind::zero_divisor || kind == SpecialKind::nilpotent;
  const bool needs_identity = kind == SpecialKind::unit || kind == SpecialKind::cauchy;
  if (needs_absorber && !a.absorber) throw Error(missing_absorber, where + " has no absorbing element");
  if (needs_identity && !a.identity) throw Error(ErrorKind::NoIdentity, where + " has no identity");
}

}  // namespace

SpecialElementReport find_special(const Structure& s, SpecialKind kind) {
  SpecialElementReport report;
  report.kind = kind;
  const auto m = s.magma();
  const Anchors a = anchors(*m);
  require_anchors(a, kind, ErrorKind::NoAbsorber, "the structure");
  const std::uint64_t n = order_of(s);
  if (!s.is_product() || kind == SpecialKind::idempotent || kind == SpecialKind::nilpotent ||
      kind == SpecialKind::cauchy) {
    for (Index x = 0; x < m->order(); ++x) {
      if (auto e = test_one(*m, a, kind, x, n)) report.elements.push_back(*e);
    }
    return report;
  }
  // Products: partners are chosen per component so the search stays linear
  // in each component instead of quadratic in the whole order.
  std::vector<MagmaPtr> parts;
  std::vector<Anchors> part_anchors;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    parts.push_back(s.component_magma(i));
    part_anchors.push_back(anchors(*parts.back()));
  }
  for (Index x = 0; x < m->order(); ++x) {
    const auto xs = m->split(x);
    std::vector<Index> ys(s.arity());
    bool ok = true;
    if (kind == SpecialKind::unit) {
      for (std::size_t i = 0; i < s.arity() && ok; ++i) {
        const auto y = inverse(*parts[i], xs[i], *part_anchors[i].identity);
        ok = y.has_value();
        if (ok) ys[i] = *y;
      }
    } else {
      // x·y = 0 with y ≠ 0: each component needs x_i·y_i = z_i, and y must
      // differ from the absorber in at least one component.
      if (x == *a.absorber) continue;
      bool some_nonzero = false;
      for (std::size_t i = 0; i < s.arity() && ok; ++i) {
        const Index z = *part_anchors[i].absorber;
        if (const auto y = zero_partner(*parts[i], xs[i], z)) {
          ys[i] = *y;
          some_nonzero = true;
        } else {
          ys[i] = z;
          ok = parts[i]->op(xs[i], z) == z;
        }
      }
      ok = ok && some_nonzero;
    }
    if (!ok) continue;
    SpecialElement e;
    e.element = x;
    e.partner = m->join(ys);
    report.elements.push_back(e);
  }
  return report;
}

SpecialElementReport find_quasi_special(const Structure& s, SpecialKind kind, std::uint32_t mask) {
  if (!s.is_product()) throw Error(ErrorKind::ArityMismatch, "quasi elements need a product structure");
  const std::size_t k = s.arity();
  const std::uint32_t full = (k >= 32 ? 0xffffffffu : (1u << k) - 1u);
  if (mask != 0 && (mask & ~full || mask == full)) {
    throw Error(ErrorKind::InvalidArgument, "the active mask must be a proper nonempty subset of components");
  }
  std::vector<MagmaPtr> parts;
  std::vector<Anchors> part_anchors;
  for (std::size_t i = 0; i < k; ++i) {
    parts.push_back(s.component_magma(i));
    part_anchors.push_back(anchors(*parts.back()));
  }
  SpecialElementReport report;
  report.kind = kind;
  report.quasi = true;
  const auto whole = s.magma();
  for (std::uint32_t mk = 1; mk < full; ++mk) {
    if (mask != 0 && mk != mask) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mk >> i & 1u) && !part_anchors[i].absorber) {
        throw Error(ErrorKind::NoAbsorberInComponent,
                    "component " + std::to_string(i + 1) + " has no absorbing element");
      }
      if (mk >> i & 1u) require_anchors(part_anchors[i], kind, ErrorKind::NoAbsorberInComponent,
                                        "component " + std::to_string(i + 1));
    }
    // Per active component, the elements of that kind.
    std::vector<std::vector<SpecialElement>> per(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mk >> i & 1u)) {
        SpecialElement pinned;
        pinned.element = *part_anchors[i].absorber;
        pinned.partner = *part_anchors[i].absorber;
        per[i].push_back(pinned);
        continue;
      }
      const std::uint64_t n = parts[i]->order();
      for (Index x = 0; x < parts[i]->order(); ++x) {
        if (auto e = test_one(*parts[i], part_anchors[i], kind, x, n)) per[i].push_back(*e);
      }
    }
    // Cross the per-component choices.
    std::vector<std::size_t> pick(k, 0);
    bool empty = false;
    for (const auto& v : per) empty = empty || v.empty();
    while (!empty) {
      std::vector<Index> xs(k);
      std::vector<Index> ys(k);
      std::uint64_t power = 0;
      bool trivial = true;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& e = per[i][pick[i]];
        xs[i] = e.element;
        ys[i] = e.partner.value_or(e.element);
        if (mk >> i & 1u) {
          trivial = trivial && e.trivial;
          if (e.power) power = power == 0 ? *e.power : static_cast<std::uint64_t>(lcm(power, *e.power));
        }
      }
      SpecialElement out;
      out.element = whole->join(xs);
      if (kind == SpecialKind::zero_divisor || kind == SpecialKind::unit) out.partner = whole->join(ys);
      if (power) out.power = power;
      out.trivial = kind == SpecialKind::idempotent && trivial;
      out.active_mask = mk;
      report.elements.push_back(out);
      std::size_t i = k;
      while (i-- > 0) {
        if (++pick[i] < per[i].size()) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return report;
}

bool verify_certificate(const Structure& s, SpecialKind kind, const SpecialElement& e) {
  const auto m = s.magma();
  const Index x = e.element;
  if (e.active_mask) {
    // Quasi: active components satisfy the kind, the rest sit at their absorber.
    const auto xs = m->split(x);
    const auto ys = e.partner ? m->split(*e.partner) : xs;
    for (std::size_t i = 0; i < s.arity(); ++i) {
      const auto c = s.component_magma(i);
      const Anchors a = anchors(*c);
      if (!(*e.active_mask >> i & 1u)) {
        if (xs[i] != *a.absorber) return false;
        continue;
      }
      switch (kind) {
        case SpecialKind::zero_divisor:
          if (xs[i] == *a.absorber || ys[i] == *a.absorber || c->op(xs[i], ys[i]) != *a.absorber) return false;
          break;
        case SpecialKind::unit:
          if (c->op(xs[i], ys[i]) != *a.identity || c->op(ys[i], xs[i]) != *a.identity) return false;
          break;
        case SpecialKind::idempotent:
          if (c->op(xs[i], xs[i]) != xs[i]) return false;
          break;
        case SpecialKind::nilpotent:
          if (!nil_index(*c, xs[i], *a.absorber)) return false;
          break;
        case SpecialKind::cauchy: {
          const auto r = element_order(*c, xs[i]);
          if (!r || *r <= 1 || c->order() % *r != 0) return false;
          break;
        }
      }
    }
    return true;
  }
  const Anchors a = anchors(*m);
  switch (kind) {
    case SpecialKind::zero_divisor:
      return e.partner && x != *a.absorber && *e.partner != *a.absorber && m->op(x, *e.partner) == *a.absorber;
    case SpecialKind::unit:
      return e.partner && m->op(x, *e.partner) == *a.identity && m->op(*e.partner, x) == *a.identity;
    case SpecialKind::idempotent:
      return m->op(x, x) == x;
    case SpecialKind::nilpotent:
      return e.power && left_power(*m, x, *e.power) == *a.absorber &&
             (*e.power == 1 || left_power(*m, x, *e.power - 1) != *a.absorber);
    case SpecialKind::cauchy: {
      const auto r = element_order(*m, x);
      return r && e.power && *r == *e.power && *r > 1 && order_of(s) % *r == 0;
    }
  }
  return false;
}

CauchyAudit cauchy_audit(const Structure& s) {
  CauchyAudit audit;
  audit.structure_order = order_of(s);
  std::vector<MagmaPtr> parts;
  std::vector<std::vector<std::uint64_t>> orders;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    parts.push_back(s.component_magma(i));
    const auto& c = *parts.back();
    if (!identity_of(c)) throw Error(ErrorKind::NoIdentity, "component " + std::to_string(i + 1) + " has no identity");
    std::vector<std::uint64_t> r(c.order());
    for (Index x = 0; x < c.order(); ++x) r[x] = element_order(c, x).value_or(0);
    orders.push_back(std::move(r));
  }
  const auto whole = s.magma();
  for (Index x = 0; x < whole->order(); ++x) {
    const auto xs = s.is_product() ? whole->split(x) : std::vector<Index>{x};
    CauchyEntry entry;
    entry.element = x;
    entry.standard_order = 1;
    entry.book_order = 1;
    bool all_finite = true;
    bool all_nontrivial = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::uint64_t r = orders[i][xs[i]];
      entry.component_orders.push_back(r);
      if (r == 0) {
        all_finite = false;
        continue;
      }
      all_nontrivial = all_nontrivial && r > 1;
      entry.standard_order = lcm(entry.standard_order, r);
      entry.book_order *= r;
    }
    if (!all_finite) continue;
    if (entry.standard_order > 1 && audit.structure_order % entry.standard_order == 0) audit.standard.push_back(entry);
    if (all_nontrivial) {
      (audit.structure_order % entry.book_order == 0 ? audit.book : audit.book_failures).push_back(entry);
    }
  }
  return audit;
}

}  // namespace ialg
