#include "ialg/substructures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

namespace {

void check_members(const Magma& m, const std::vector<Index>& seed) {
  if (seed.empty()) throw Error(ErrorKind::InvalidArgument, "seed must be nonempty");
  for (const Index i : seed) {
    if (i >= m.order()) throw Error(ErrorKind::CarrierMismatch, "seed index " + std::to_string(i) + " out of range");
  }
}

bool matches(const StructureClass& c, ClassLabel filter) {
  switch (filter) {
    case ClassLabel::group: return c.label == ClassLabel::group;
    case ClassLabel::monoid: return c.associative && c.has_identity;
    case ClassLabel::semigroup: return c.associative;
    case ClassLabel::loop: return c.latin_square && c.has_identity;
    case ClassLabel::quasigroup: return c.latin_square;
    case ClassLabel::groupoid: return c.closed;
  }
  return false;
}

bool canonical_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members < b.members;
}

Subset make_subset(const Magma& m, std::vector<Index> members) {
  Subset s;
  s.cls = classify(*m.restrict_to(members));
  s.members = std::move(members);
  return s;
}

bool is_closed(const Magma& m, const std::vector<Index>& members) {
  std::vector<char> in(m.order(), 0);
  for (const Index i : members) in[i] = 1;
  for (const Index a : members) {
    for (const Index b : members) {
      if (!in[m.op(a, b)]) return false;
    }
  }
  return true;
}

// Visits seeds in descending index order: singletons, then pairs (a > b).
template <class Visit>
bool for_each_seed_descending(Index n, unsigned max_seed, Visit&& visit) {
  for (Index a = n; a-- > 0;) {
    if (visit(std::vector<Index>{a})) return true;
  }
  if (max_seed < 2) return false;
  for (Index a = n; a-- > 0;) {
    for (Index b = a; b-- > 0;) {
      if (visit(std::vector<Index>{b, a})) return true;
    }
  }
  return false;
}

// All k-subsets of {0..n-1} in lexicographic order, for k >= 3.
template <class Visit>
void for_each_combination(Index n, unsigned k, Visit&& visit) {
  if (k > n) return;
  std::vector<Index> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = i;
  while (true) {
    visit(c);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

template <class T>
std::vector<std::vector<T>> cross(const std::vector<std::vector<T>>& options) {
  std::vector<std::vector<T>> out{{}};
  for (const auto& choices : options) {
    std::vector<std::vector<T>> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (const auto& c : choices) {
        auto row = prefix;
        row.push_back(c);
        next.push_back(std::move(row));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::uint64_t Substructure::order() const {
  std::uint64_t n = 1;
  for (const auto& p : parts) n *= p.size();
  return n;
}

std::vector<std::vector<std::string>> Substructure::labels(const Structure& parent) const {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto m = parent.component_magma(i);
    std::vector<std::string> names;
    for (const Index x : parts[i].members) names.push_back(m->label(x));
    out.push_back(std::move(names));
  }
  return out;
}

std::vector<Index> closure(const Magma& m, const std::vector<Index>& seed) {
  check_members(m, seed);
  std::vector<char> in(m.order(), 0);
  std::vector<Index> members;
  for (const Index i : seed) {
    if (!in[i]) {
      in[i] = 1;
      members.push_back(i);
    }
  }
  // Every pair (i, j) with max(i, j) >= done has not been multiplied yet.
  for (std::size_t done = 0; done < members.size(); ++done) {
    const Index x = members[done];
    for (std::size_t j = 0; j <= done; ++j) {
      const Index y = members[j];
      for (const Index p : {m.op(x, y), m.op(y, x)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Substructure closure(const Structure& s, const std::vector<std::vector<Index>>& seed) {
  if (seed.size() != s.arity()) throw Error(ErrorKind::ArityMismatch, "one seed per component is required");
  Substructure out;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    const auto m = s.component_magma(i);
    out.parts.push_back(make_subset(*m, closure(*m, seed[i])));
  }
  return out;
}

bool proper_nontrivial(const Magma& m, const std::vector<Index>& members) {
  if (members.empty() || members.size() >= m.order()) return false;
  if (members.size() == 1) {
    const auto e = identity_of(m);
    const auto z = absorbing_element(m);
    if ((e && *e == members[0]) || (z && *z == members[0])) return false;
  }
  return true;
}

Enumeration enumerate_substructures(const Magma& m, const EnumerationOptions& options) {
  Enumeration result;
  std::set<std::vector<Index>> seen;
  auto consider = [&](std::vector<Index> members) {
    if (members.size() > options.max_size) return;
    if (!options.include_trivial && !proper_nontrivial(m, members)) return;
    if (!seen.insert(members).second) return;
    Subset s = make_subset(m, std::move(members));
    if (options.class_filter && !matches(s.cls, *options.class_filter)) return;
    result.found.push_back(std::move(s));
  };
  const Index n = m.order();
  if (n <= options.powerset_limit && n < 32) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Index> members;
      for (Index i = 0; i < n; ++i) {
        if (mask & (1u << i)) members.push_back(i);
      }
      if (is_closed(m, members)) consider(std::move(members));
    }
  } else {
    for_each_seed_descending(n, options.max_seed, [&](const std::vector<Index>& seed) {
      consider(closure(m, seed));
      return false;
    });
    for (unsigned k = 3; k <= options.max_seed; ++k) {
      for_each_combination(n, k, [&](const std::vector<Index>& seed) { consider(closure(m, seed)); });
    }
    result.complete = options.max_seed >= n;
  }
  std::sort(result.found.begin(), result.found.end(), canonical_less);
  return result;
}

ProductEnumeration enumerate_substructures(const Structure& s, const EnumerationOptions& options) {
  ProductEnumeration result;
  if (!s.is_product()) {
    auto e = enumerate_substructures(*s.component_magma(0), options);
    for (auto& sub : e.found) result.found.push_back(Substructure{{std::move(sub)}});
    result.complete = e.complete;
    return result;
  }
  // The class filter and size bound apply per component here; the overall
  // size bound is enforced on the product order below.
  EnumerationOptions per = options;
  per.max_size = SIZE_MAX;
  std::vector<std::vector<Subset>> options_per_component;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    auto e = enumerate_substructures(*s.component_magma(i), per);
    result.complete = result.complete && e.complete;
    options_per_component.push_back(std::move(e.found));
  }
  for (auto& parts : cross(options_per_component)) {
    Substructure sub{std::move(parts)};
    if (sub.order() <= options.max_size) result.found.push_back(std::move(sub));
  }
  return result;
}

std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two";
  }
  return "two";
}

bool is_ideal(const Magma& m, const std::vector<Index>& members, Side side) {
  std::vector<char> in(m.order(), 0);
  for (const Index i : members) in[i] = 1;
  for (Index s = 0; s < m.order(); ++s) {
    for (const Index p : members) {
      if (side != Side::right && !in[m.op(s, p)]) return false;
      if (side != Side::left && !in[m.op(p, s)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Index>> enumerate_ideals(const Magma& m, Side side) {
  const Index n = m.order();
  const std::size_t words = (n + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  auto principal = [&](Index p) {
    Bits bits(words, 0);
    std::vector<Index> stack{p};
    bits[p / 64] |= std::uint64_t{1} << (p % 64);
    while (!stack.empty()) {
      const Index x = stack.back();
      stack.pop_back();
      for (Index s = 0; s < n; ++s) {
        Index next[2];
        int k = 0;
        if (side != Side::right) next[k++] = m.op(s, x);
        if (side != Side::left) next[k++] = m.op(x, s);
        for (int i = 0; i < k; ++i) {
          const Index y = next[i];
          auto& w = bits[y / 64];
          const auto bit = std::uint64_t{1} << (y % 64);
          if (!(w & bit)) {
            w |= bit;
            stack.push_back(y);
          }
        }
      }
    }
    return bits;
  };
  std::set<Bits> generators;
  for (Index p = 0; p < n; ++p) generators.insert(principal(p));
  // Close the generator set under union.
  constexpr std::size_t kBudget = std::size_t{1} << 18;
  std::set<Bits> ideals(generators.begin(), generators.end());
  std::vector<Bits> frontier(generators.begin(), generators.end());
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        Bits u(words);
        for (std::size_t w = 0; w < words; ++w) u[w] = a[w] | g[w];
        if (ideals.insert(u).second) {
          next.push_back(std::move(u));
          if (ideals.size() > kBudget) {
            throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(kBudget) + " ideals");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Index>> out;
  out.reserve(ideals.size());
  for (const auto& bits : ideals) {
    std::vector<Index> members;
    for (Index i = 0; i < n; ++i) {
      if (bits[i / 64] >> (i % 64) & 1u) members.push_back(i);
    }
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<std::vector<Index>>> enumerate_ideals(const Structure& s, Side side) {
  std::vector<std::vector<std::vector<Index>>> per;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    const auto m = s.component_magma(i);
    auto all = enumerate_ideals(*m, side);
    if (s.is_product()) {
      std::erase_if(all, [&](const auto& members) { return !proper_nontrivial(*m, members); });
    }
    per.push_back(std::move(all));
  }
  return cross(per);
}

std::optional<std::vector<Index>> first_witness(const Magma& m, std::size_t min_size,
                                                const std::function<bool(const Magma&)>& accept) {
  std::optional<std::vector<Index>> found;
  std::set<std::vector<Index>> tried;
  for_each_seed_descending(m.order(), 2, [&](const std::vector<Index>& seed) {
    auto members = closure(m, seed);
    if (members.size() < min_size || !proper_nontrivial(m, members)) return false;
    if (!tried.insert(members).second) return false;
    if (!accept(*m.restrict_to(members))) return false;
    found = std::move(members);
    return true;
  });
  return found;
}

WitnessResult smarandache_witness(const Structure& s) {
  WitnessResult result;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    const auto m = s.component_magma(i);
    const auto cls = classify(*m);
    const ClassLabel wanted = cls.associative || cls.latin_square ? ClassLabel::group : ClassLabel::semigroup;
    result.wanted.push_back(wanted);
    auto w = first_witness(*m, 1, [wanted](const Magma& sub) { return matches(classify(sub), wanted); });
    if (w) {
      ++hits;
      result.parts.emplace_back(make_subset(*m, std::move(*w)));
    } else {
      result.parts.emplace_back(std::nullopt);
    }
  }
  result.grade = hits == s.arity() ? WitnessGrade::smarandache
                 : hits > 0        ? WitnessGrade::quasi_smarandache
                                   : WitnessGrade::none;
  return result;
}

bool is_simple(const Magma& m, SimpleMode mode) {
  if (mode == SimpleMode::ideal) {
    for (const auto& members : enumerate_ideals(m, Side::two_sided)) {
      if (proper_nontrivial(m, members)) return false;
    }
    return true;
  }
  // Any proper nontrivial closed set contains the closure of one of its
  // nontrivial elements, or else is {identity, absorber}.
  const auto e = identity_of(m);
  const auto z = absorbing_element(m);
  for (Index x = 0; x < m.order(); ++x) {
    if ((e && *e == x) || (z && *z == x)) continue;
    if (proper_nontrivial(m, closure(m, {x}))) return false;
  }
  if (e && z && *e != *z && m.order() > 2) return false;
  return true;
}

bool is_simple(const Structure& s, SimpleMode mode) {
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (is_simple(*s.component_magma(i), mode)) return true;
  }
  return false;
}

std::string_view to_string(LagrangeGrade grade) noexcept {
  switch (grade) {
    case LagrangeGrade::lagrange: return "Lagrange";
    case LagrangeGrade::weakly_lagrange: return "WeaklyLagrange";
    case LagrangeGrade::neither: return "Neither";
  }
  return "Neither";
}

LagrangeReport lagrange_audit(const Structure& s, const EnumerationOptions& options,
                              const std::vector<Substructure>& candidates) {
  LagrangeReport report;
  report.structure_order = order_of(s);
  auto enumeration = enumerate_substructures(s, options);
  report.complete = enumeration.complete;
  std::vector<Substructure> all = std::move(enumeration.found);
  for (const auto& c : candidates) {
    if (c.parts.size() != s.arity()) throw Error(ErrorKind::ArityMismatch, "candidate arity differs");
    Substructure checked;
    for (std::size_t i = 0; i < s.arity(); ++i) {
      const auto m = s.component_magma(i);
      auto members = c.parts[i].members;
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      check_members(*m, members);
      if (!is_closed(*m, members)) {
        throw Error(ErrorKind::ClosureViolation, "candidate part " + std::to_string(i + 1) + " is not closed");
      }
      checked.parts.push_back(make_subset(*m, std::move(members)));
    }
    const bool known = std::any_of(all.begin(), all.end(), [&](const Substructure& x) { return x.parts == checked.parts; });
    if (!known) all.push_back(std::move(checked));
  }
  std::size_t dividing = 0;
  for (auto& sub : all) {
    const std::uint64_t k = sub.order();
    const bool d = report.structure_order % k == 0;
    dividing += d;
    report.entries.push_back(LagrangeEntry{std::move(sub), k, d});
  }
  if (dividing == report.entries.size()) {
    report.grade = LagrangeGrade::lagrange;
  } else if (dividing > 0) {
    report.grade = LagrangeGrade::weakly_lagrange;
  } else {
    report.grade = LagrangeGrade::neither;
  }
  return report;
}

SylowReport sylow_audit(const Structure& s, std::uint64_t p, const EnumerationOptions& options) {
  if (p < 2 || !is_prime(static_cast<std::int64_t>(p))) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  }
  SylowReport report;
  report.p = p;
  report.structure_order = order_of(s);
  auto enumeration = enumerate_substructures(s, options);
  report.complete = enumeration.complete;
  auto prime_power = [p](std::uint64_t k) -> std::optional<unsigned> {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    return k == 1 && e > 0 ? std::optional<unsigned>(e) : std::nullopt;
  };
  for (auto& sub : enumeration.found) {
    const auto e = prime_power(sub.order());
    if (!e) continue;
    if (*e > report.max_k) {
      report.max_k = *e;
      report.witnesses.clear();
    }
    if (*e == report.max_k) report.witnesses.push_back(std::move(sub));
  }
  if (report.max_k > 0) {
    const std::uint64_t pk = *checked_pow(p, report.max_k);
    report.divides = report.structure_order % pk == 0;
    const auto next = checked_mul(pk, p);
    report.maximal = report.divides && (!next || report.structure_order % *next != 0);
  }
  return report;
}

}  // namespace ialg
