#include "ialg/loops.hpp"

#include <algorithm>

#include "ialg/error.hpp"
#include "ialg/substructures.hpp"

namespace ialg {

namespace {

using Set = std::vector<char>;

Set to_set(Index n, const std::vector<Index>& members) {
  Set s(n, 0);
  for (const Index i : members) s.at(i) = 1;
  return s;
}

std::vector<Index> to_list(const Set& s) {
  std::vector<Index> out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(i);
  }
  return out;
}

Index identity_or_throw(const Magma& m) {
  const auto e = identity_of(m);
  if (!e) throw Error(ErrorKind::NoIdentity, "the loop has no identity");
  return *e;
}

// Solves a·x = b for x, or x·a = b, requiring uniqueness.
struct Division {
  const Magma& m;
  std::vector<Index> left;   // left[a*n + b] = x with a·x = b
  std::vector<Index> right;  // right[a*n + b] = x with x·a = b

  explicit Division(const Magma& magma) : m(magma) {
    const Index n = m.order();
    const Index none = n;
    left.assign(static_cast<std::size_t>(n) * n, none);
    right.assign(static_cast<std::size_t>(n) * n, none);
    for (Index a = 0; a < n; ++a) {
      for (Index x = 0; x < n; ++x) {
        auto& l = left[static_cast<std::size_t>(a) * n + m.op(a, x)];
        auto& r = right[static_cast<std::size_t>(a) * n + m.op(x, a)];
        if (l != none || r != none) throw Error(ErrorKind::NotLatin, "division is not unique");
        l = x;
        r = x;
      }
    }
  }
  Index under(Index a, Index b) const { return left[static_cast<std::size_t>(a) * m.order() + b]; }
  Index over(Index b, Index a) const { return right[static_cast<std::size_t>(a) * m.order() + b]; }
};

// The unique x with a·x = e. Only row a needs to be a permutation, so this
// also works on formula-only magmas whose columns repeat.
Index right_inverse(const Magma& m, Index a, Index e) {
  std::optional<Index> found;
  for (Index x = 0; x < m.order(); ++x) {
    if (m.op(a, x) != e) continue;
    if (found) throw Error(ErrorKind::NotLatin, "right inverse of " + m.label(a) + " is not unique");
    found = x;
  }
  if (!found) throw Error(ErrorKind::NotLatin, m.label(a) + " has no right inverse");
  return *found;
}

Set left_coset(const Magma& m, Index x, const std::vector<Index>& h) {
  Set s(m.order(), 0);
  for (const Index y : h) s[m.op(x, y)] = 1;
  return s;
}

Set right_coset(const Magma& m, const std::vector<Index>& h, Index x) {
  Set s(m.order(), 0);
  for (const Index y : h) s[m.op(y, x)] = 1;
  return s;
}

}  // namespace

std::vector<Index> subloop_family_set(std::uint32_t n, std::uint32_t t, std::uint32_t base) {
  if (t == 0 || n % t != 0 || base < 1 || base > t) {
    throw Error(ErrorKind::InvalidArgument, "H_i(t) needs t | n and 1 <= i <= t");
  }
  std::vector<Index> out{0};
  for (std::uint32_t k = 0; k < n / t; ++k) out.push_back(base + k * t);
  return out;
}

std::vector<SubloopFamilyMember> loop_subloop_family(const Magma& loop, std::uint32_t n) {
  if (loop.order() != n + 1) throw Error(ErrorKind::CarrierMismatch, "loop order differs from n + 1");
  std::vector<SubloopFamilyMember> out;
  for (std::uint32_t t = 2; t < n; ++t) {
    if (n % t != 0) continue;
    for (std::uint32_t i = 1; i <= t; ++i) {
      SubloopFamilyMember h;
      h.t = t;
      h.base = i;
      h.members = subloop_family_set(n, t, i);
      h.closed = closure(loop, h.members) == h.members;
      if (h.closed) {
        const auto c = classify(*loop.restrict_to(h.members));
        h.is_loop = c.latin_square && c.has_identity;
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

Normalizers normalizers(const Magma& loop, const std::vector<Index>& h) {
  const Index n = loop.order();
  const Index e = identity_or_throw(loop);
  const Set target = to_set(n, h);
  Set first(n, 0);
  Set second(n, 0);
  for (Index j = 0; j < n; ++j) {
    first[j] = left_coset(loop, j, h) == right_coset(loop, h, j);
    const Index inv = right_inverse(loop, j, e);
    Set conj(n, 0);
    for (const Index y : h) conj[loop.op(loop.op(j, y), inv)] = 1;
    second[j] = conj == target;
  }
  Normalizers out{to_list(first), to_list(second), false};
  out.equal = out.first == out.second;
  return out;
}

LoopCenters loop_centers(const Magma& loop) {
  const Index n = loop.order();
  LoopCenters c;
  for (Index a = 0; a < n; ++a) {
    bool comm = true;
    bool left = true;
    bool middle = true;
    bool right = true;
    bool moufang = true;
    const Index aa = loop.op(a, a);
    for (Index x = 0; x < n; ++x) {
      comm = comm && loop.op(a, x) == loop.op(x, a);
      for (Index y = 0; y < n; ++y) {
        left = left && loop.op(loop.op(a, x), y) == loop.op(a, loop.op(x, y));
        middle = middle && loop.op(loop.op(x, a), y) == loop.op(x, loop.op(a, y));
        right = right && loop.op(loop.op(x, y), a) == loop.op(x, loop.op(y, a));
        moufang = moufang && loop.op(aa, loop.op(x, y)) == loop.op(loop.op(a, x), loop.op(a, y));
      }
    }
    if (comm) c.commutant.push_back(a);
    if (left) c.left_nucleus.push_back(a);
    if (middle) c.middle_nucleus.push_back(a);
    if (right) c.right_nucleus.push_back(a);
    if (left && middle && right) c.nucleus.push_back(a);
    if (comm && left && middle && right) c.center.push_back(a);
    if (moufang) c.moufang_center.push_back(a);
  }
  return c;
}

DerivedSubloops derived_subloops(const Magma& loop, const std::optional<std::vector<Index>>& within) {
  const Index n = loop.order();
  const Index e = identity_or_throw(loop);
  const Division div(loop);
  std::vector<Index> pool;
  if (within) {
    pool = *within;
  } else {
    for (Index i = 0; i < n; ++i) pool.push_back(i);
  }
  Set comm(n, 0);
  Set assoc(n, 0);
  comm[e] = assoc[e] = 1;
  for (const Index x : pool) {
    for (const Index y : pool) {
      comm[div.under(loop.op(y, x), loop.op(x, y))] = 1;
      for (const Index z : pool) {
        assoc[div.under(loop.op(x, loop.op(y, z)), loop.op(loop.op(x, y), z))] = 1;
      }
    }
  }
  return {closure(loop, to_list(comm)), closure(loop, to_list(assoc))};
}

MagmaPtr principal_isotope(const Magma& loop, Index a, Index b) {
  const Index n = loop.order();
  if (a >= n || b >= n) throw Error(ErrorKind::CarrierMismatch, "isotope parameters out of range");
  const Division div(loop);
  CayleyTable t{n, std::vector<Index>(static_cast<std::size_t>(n) * n)};
  for (Index x = 0; x < n; ++x) {
    const Index rx = div.over(x, b);  // R_b⁻¹(x): r with r·b = x
    for (Index y = 0; y < n; ++y) {
      const Index ly = div.under(a, y);  // L_a⁻¹(y): l with a·l = y
      t.cells[static_cast<std::size_t>(x) * n + y] = loop.op(rx, ly);
    }
  }
  return Magma::from_table(std::move(t), loop.labels());
}

std::vector<IsotopeMatch> isotope_search(const Magma& loop, const std::vector<Index>& target) {
  const Index n = loop.order();
  if (target.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::InvalidArgument, "target table has the wrong size");
  }
  std::vector<IsotopeMatch> best;
  std::size_t fewest = SIZE_MAX;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto iso = principal_isotope(loop, a, b);
      IsotopeMatch m{a, b, {}};
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          if (iso->op(x, y) != target[static_cast<std::size_t>(x) * n + y]) m.mismatches.emplace_back(x, y);
        }
      }
      if (m.mismatches.size() < fewest) {
        fewest = m.mismatches.size();
        best.clear();
      }
      if (m.mismatches.size() == fewest) best.push_back(std::move(m));
    }
  }
  return best;
}

bool is_normal_subloop(const Magma& loop, const std::vector<Index>& h) {
  const Index n = loop.order();
  if (closure(loop, h) != [&] {
        auto s = h;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
      }()) {
    throw Error(ErrorKind::ClosureViolation, "H is not closed");
  }
  for (Index x = 0; x < n; ++x) {
    if (left_coset(loop, x, h) != right_coset(loop, h, x)) return false;
    for (Index y = 0; y < n; ++y) {
      const Index xy = loop.op(x, y);
      // (x·y)·H = x·(y·H)
      Set lhs = left_coset(loop, xy, h);
      Set rhs(n, 0);
      for (const Index k : h) rhs[loop.op(x, loop.op(y, k))] = 1;
      if (lhs != rhs) return false;
      // (H·x)·y = H·(x·y)
      Set l2(n, 0);
      for (const Index k : h) l2[loop.op(loop.op(k, x), y)] = 1;
      if (l2 != right_coset(loop, h, xy)) return false;
    }
  }
  return true;
}

}  // namespace ialg
