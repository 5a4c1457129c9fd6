#include "ialg/carrier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

namespace {

std::atomic<std::uint64_t>& max_order_slot() {
  static std::atomic<std::uint64_t> slot = [] {
    if (const char* env = std::getenv("IALG_MAX_ORDER")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1'000'000};
  }();
  return slot;
}

std::uint64_t factorial(unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

[[noreturn]] void mismatch(const Carrier& c, const Element& e) {
  throw Error(ErrorKind::CarrierMismatch, label(e) + " is not an element of " + c.describe());
}

}  // namespace

std::uint64_t max_order() { return max_order_slot().load(); }
void set_max_order(std::uint64_t cap) { max_order_slot().store(cap); }

Carrier Carrier::zmod(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Z_n requires n >= 1");
  return {Zmod{n}};
}
Carrier Carrier::units(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "units group requires n >= 1");
  return {ZmodUnits{n}};
}
Carrier Carrier::loop_set(std::uint32_t n) { return {LoopSet{n}}; }
Carrier Carrier::maps(unsigned k, bool bijective) { return {Maps{k, bijective}}; }
Carrier Carrier::matrix(std::size_t rows, std::size_t cols, Carrier inner) {
  return {MatrixOf{rows, cols, std::make_shared<const Carrier>(std::move(inner))}};
}
Carrier Carrier::tuple(std::vector<Carrier> parts) { return {TupleOf{std::move(parts)}}; }
Carrier Carrier::unbounded(NumberField field) { return {UnboundedNonneg{field}}; }

bool Carrier::enumerable() const {
  if (get_if<UnboundedNonneg>()) return false;
  if (auto m = get_if<MatrixOf>()) return m->inner->enumerable();
  if (auto t = get_if<TupleOf>()) {
    return std::all_of(t->parts.begin(), t->parts.end(),
                       [](const Carrier& c) { return c.enumerable(); });
  }
  return true;
}

std::uint64_t Carrier::size() const {
  if (!enumerable()) throw Error(ErrorKind::InfiniteCarrier, describe() + " is infinite");
  auto too_large = [this] {
    return Error(ErrorKind::OrderTooLarge, describe() + " has more than 2^64 elements");
  };
  if (auto z = get_if<Zmod>()) return static_cast<std::uint64_t>(z->n);
  if (auto u = get_if<ZmodUnits>()) return unit_residues(u->n).size();
  if (auto l = get_if<LoopSet>()) return std::uint64_t{l->n} + 1;
  if (auto m = get_if<Maps>()) {
    if (m->bijective) return factorial(m->k);
    auto r = checked_pow(m->k, m->k);
    if (!r) throw too_large();
    return *r;
  }
  if (auto m = get_if<MatrixOf>()) {
    auto r = checked_pow(m->inner->size(), static_cast<unsigned>(m->rows * m->cols));
    if (!r) throw too_large();
    return *r;
  }
  const auto& t = std::get<TupleOf>(kind);
  std::uint64_t total = 1;
  for (const auto& part : t.parts) {
    auto r = checked_mul(total, part.size());
    if (!r) throw too_large();
    total = *r;
  }
  return total;
}

std::uint64_t Carrier::checked_size() const {
  const std::uint64_t n = size();
  if (n > max_order()) {
    throw Error(ErrorKind::OrderTooLarge, describe() + " has " + std::to_string(n) +
                                              " elements, above the cap of " +
                                              std::to_string(max_order()));
  }
  return n;
}

Element Carrier::element_at(std::uint64_t index) const {
  if (index >= size()) {
    throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(index) + " out of range");
  }
  if (auto z = get_if<Zmod>()) return Element::mod(static_cast<std::int64_t>(index), z->n);
  if (auto u = get_if<ZmodUnits>()) return Element::mod(unit_residues(u->n)[index], u->n);
  if (auto l = get_if<LoopSet>()) return Element::loop(static_cast<std::uint32_t>(index), l->n);
  if (auto m = get_if<Maps>()) {
    if (m->bijective) return Element::map(permutation_unrank(index, m->k));
    std::vector<std::uint8_t> images(m->k);
    for (unsigned i = m->k; i-- > 0;) {
      images[i] = static_cast<std::uint8_t>(index % m->k + 1);
      index /= m->k;
    }
    return Element::map(std::move(images));
  }
  if (auto m = get_if<MatrixOf>()) {
    const std::uint64_t base = m->inner->size();
    std::vector<Element> cells(m->rows * m->cols);
    for (std::size_t i = cells.size(); i-- > 0;) {
      cells[i] = m->inner->element_at(index % base);
      index /= base;
    }
    return Element::matrix(m->rows, m->cols, std::move(cells));
  }
  const auto& t = std::get<TupleOf>(kind);
  std::vector<Element> parts(t.parts.size());
  for (std::size_t i = parts.size(); i-- > 0;) {
    const std::uint64_t base = t.parts[i].size();
    parts[i] = t.parts[i].element_at(index % base);
    index /= base;
  }
  return Element::tuple(std::move(parts));
}

std::uint64_t Carrier::index_of(const Element& e) const {
  if (!enumerable()) throw Error(ErrorKind::InfiniteCarrier, describe() + " is infinite");
  if (auto z = get_if<Zmod>()) {
    const auto* m = std::get_if<ModInterval>(&e.value);
    if (!m || m->modulus != z->n || m->value < 0 || m->value >= z->n) mismatch(*this, e);
    return static_cast<std::uint64_t>(m->value);
  }
  if (auto u = get_if<ZmodUnits>()) {
    const auto* m = std::get_if<ModInterval>(&e.value);
    if (!m || m->modulus != u->n) mismatch(*this, e);
    const auto units = unit_residues(u->n);
    auto it = std::lower_bound(units.begin(), units.end(), m->value);
    if (it == units.end() || *it != m->value) mismatch(*this, e);
    return static_cast<std::uint64_t>(it - units.begin());
  }
  if (auto l = get_if<LoopSet>()) {
    const auto* p = std::get_if<LoopPoint>(&e.value);
    if (!p || p->ambient != l->n || p->point > l->n) mismatch(*this, e);
    return p->point;
  }
  if (auto m = get_if<Maps>()) {
    const auto* f = std::get_if<MapElement>(&e.value);
    if (!f || f->images.size() != m->k) mismatch(*this, e);
    for (auto img : f->images) {
      if (img < 1 || img > m->k) mismatch(*this, e);
    }
    if (m->bijective) {
      auto sorted = f->images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) mismatch(*this, e);
      return permutation_rank(f->images);
    }
    std::uint64_t idx = 0;
    for (auto img : f->images) idx = idx * m->k + (img - 1u);
    return idx;
  }
  if (auto m = get_if<MatrixOf>()) {
    const auto* x = std::get_if<MatrixElement>(&e.value);
    if (!x || x->rows != m->rows || x->cols != m->cols) mismatch(*this, e);
    const std::uint64_t base = m->inner->size();
    std::uint64_t idx = 0;
    for (const auto& cell : x->cells) idx = idx * base + m->inner->index_of(cell);
    return idx;
  }
  const auto& t = std::get<TupleOf>(kind);
  const auto* x = std::get_if<TupleElement>(&e.value);
  if (!x || x->parts.size() != t.parts.size()) mismatch(*this, e);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    idx = idx * t.parts[i].size() + t.parts[i].index_of(x->parts[i]);
  }
  return idx;
}

bool Carrier::contains(const Element& e) const {
  if (auto u = get_if<UnboundedNonneg>()) {
    const auto* x = std::get_if<NonnegNumber>(&e.value);
    if (!x || x->field != u->field) return false;
    return x->field == NumberField::reals ? x->real >= 0.0 : (x->num >= 0 && x->den > 0);
  }
  if (auto m = get_if<MatrixOf>()) {
    const auto* x = std::get_if<MatrixElement>(&e.value);
    if (!x || x->rows != m->rows || x->cols != m->cols) return false;
    return std::all_of(x->cells.begin(), x->cells.end(),
                       [&](const Element& c) { return m->inner->contains(c); });
  }
  if (auto t = get_if<TupleOf>()) {
    const auto* x = std::get_if<TupleElement>(&e.value);
    if (!x || x->parts.size() != t->parts.size()) return false;
    for (std::size_t i = 0; i < t->parts.size(); ++i) {
      if (!t->parts[i].contains(x->parts[i])) return false;
    }
    return true;
  }
  try {
    (void)index_of(e);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string Carrier::describe() const {
  if (auto z = get_if<Zmod>()) return "Z_" + std::to_string(z->n);
  if (auto u = get_if<ZmodUnits>()) return "U(Z_" + std::to_string(u->n) + ")";
  if (auto l = get_if<LoopSet>()) return "{e,1..." + std::to_string(l->n) + "}";
  if (auto m = get_if<Maps>()) {
    return std::string(m->bijective ? "S_" : "T_") + std::to_string(m->k);
  }
  if (auto m = get_if<MatrixOf>()) {
    return std::to_string(m->rows) + "x" + std::to_string(m->cols) + " over " +
           m->inner->describe();
  }
  if (auto u = get_if<UnboundedNonneg>()) {
    switch (u->field) {
      case NumberField::integers: return "Z+ u {0}";
      case NumberField::rationals: return "Q+ u {0}";
      case NumberField::reals: return "R+ u {0}";
    }
  }
  const auto& t = std::get<TupleOf>(kind);
  std::string out;
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i) out += " x ";
    out += t.parts[i].describe();
  }
  return out;
}

std::vector<Element> enumerate(const Carrier& carrier) {
  const std::uint64_t n = carrier.checked_size();
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(carrier.element_at(i));
  return out;
}

std::vector<std::int64_t> unit_residues(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n == 1) return {0};
  for (std::int64_t a = 1; a < n; ++a) {
    if (gcd(a, n) == 1) out.push_back(a);
  }
  return out;
}

std::uint64_t permutation_rank(const std::vector<std::uint8_t>& images) {
  const std::size_t k = images.size();
  std::uint64_t rank = 0;
  std::vector<bool> used(k + 1, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller = 0;
    for (std::uint8_t v = 1; v < images[i]; ++v) {
      if (!used[v]) ++smaller;
    }
    used[images[i]] = true;
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

std::vector<std::uint8_t> permutation_unrank(std::uint64_t rank, unsigned k) {
  std::vector<std::uint64_t> digits(k);
  for (unsigned i = k; i-- > 0;) {
    const std::uint64_t base = k - i;
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<std::uint8_t> pool;
  for (unsigned v = 1; v <= k; ++v) pool.push_back(static_cast<std::uint8_t>(v));
  std::vector<std::uint8_t> out;
  out.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return out;
}

}  // namespace ialg
