#include "ialg/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "ialg/error.hpp"

namespace ialg {

Index TermProgram::eval(const Magma& m, const std::array<Index, 3>& env) const {
  Index stack[16];
  int top = 0;
  for (const std::int8_t c : code) {
    if (c == kApply) {
      const Index b = stack[--top];
      const Index a = stack[--top];
      stack[top++] = m.op(a, b);
    } else {
      stack[top++] = env[static_cast<std::size_t>(c)];
    }
  }
  return stack[0];
}

namespace {

// Table-backed view; falls back to the computed op for large magmas.
struct Op {
  const Magma& m;
  const CayleyTable* t;
  explicit Op(const Magma& magma) : m(magma), t(magma.table_if_small()) {}
  Index operator()(Index a, Index b) const { return t ? t->at(a, b) : m.op(a, b); }
};

Index eval(const TermProgram& p, const Op& op, const Assignment& env) {
  Index stack[16];
  int top = 0;
  for (const std::int8_t c : p.code) {
    if (c == TermProgram::kApply) {
      const Index b = stack[--top];
      const Index a = stack[--top];
      stack[top++] = op(a, b);
    } else {
      stack[top++] = env[static_cast<std::size_t>(c)];
    }
  }
  return stack[0];
}

std::optional<Assignment> scan_slab(const TermProgram& lhs, const TermProgram& rhs, const Op& op, Index n,
                                    int arity, Index x) {
  const Index ny = arity > 1 ? n : 1;
  const Index nz = arity > 2 ? n : 1;
  for (Index y = 0; y < ny; ++y) {
    for (Index z = 0; z < nz; ++z) {
      const Assignment env{x, y, z};
      if (eval(lhs, op, env) != eval(rhs, op, env)) return env;
    }
  }
  return std::nullopt;
}

const TermProgram& assoc_lhs() {
  static const TermProgram p{{0, 1, TermProgram::kApply, 2, TermProgram::kApply}, 3};
  return p;
}
const TermProgram& assoc_rhs() {
  static const TermProgram p{{0, 1, 2, TermProgram::kApply, TermProgram::kApply}, 3};
  return p;
}

bool row_is_permutation(const Op& op, Index n, Index a, bool row, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  for (Index b = 0; b < n; ++b) {
    const Index v = row ? op(a, b) : op(b, a);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_identity(const Op& op, Index n, Index e) {
  for (Index x = 0; x < n; ++x) {
    if (op(e, x) != x || op(x, e) != x) return false;
  }
  return true;
}

bool is_absorber(const Op& op, Index n, Index z) {
  for (Index x = 0; x < n; ++x) {
    if (op(z, x) != z || op(x, z) != z) return false;
  }
  return true;
}

constexpr Index kNone = std::numeric_limits<Index>::max();

}  // namespace

namespace kernels::serial {

std::optional<Assignment> first_violation(const Magma& m, const TermProgram& lhs, const TermProgram& rhs) {
  const Op op(m);
  const int arity = std::max(lhs.arity, rhs.arity);
  const Index nx = arity > 0 ? m.order() : 1;
  for (Index x = 0; x < nx; ++x) {
    if (auto v = scan_slab(lhs, rhs, op, m.order(), arity, x)) return v;
  }
  return std::nullopt;
}

std::optional<Assignment> first_nonassociative(const Magma& m) {
  return first_violation(m, assoc_lhs(), assoc_rhs());
}

std::optional<std::array<Index, 2>> first_noncommuting(const Magma& m) {
  const Op op(m);
  const Index n = m.order();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) return std::array<Index, 2>{a, b};
    }
  }
  return std::nullopt;
}

std::optional<std::array<Index, 2>> first_nonlatin(const Magma& m) {
  const Op op(m);
  const Index n = m.order();
  std::vector<char> seen(n);
  for (Index a = 0; a < n; ++a) {
    if (!row_is_permutation(op, n, a, true, seen)) return std::array<Index, 2>{0, a};
  }
  for (Index a = 0; a < n; ++a) {
    if (!row_is_permutation(op, n, a, false, seen)) return std::array<Index, 2>{1, a};
  }
  return std::nullopt;
}

std::optional<Index> identity(const Magma& m) {
  const Op op(m);
  for (Index e = 0; e < m.order(); ++e) {
    if (is_identity(op, m.order(), e)) return e;
  }
  return std::nullopt;
}

std::optional<Index> absorber(const Magma& m) {
  const Op op(m);
  for (Index z = 0; z < m.order(); ++z) {
    if (is_absorber(op, m.order(), z)) return z;
  }
  return std::nullopt;
}

std::uint64_t count_idempotents(const Magma& m) {
  const Op op(m);
  std::uint64_t c = 0;
  for (Index x = 0; x < m.order(); ++x) c += op(x, x) == x;
  return c;
}

}  // namespace kernels::serial

namespace kernels::parallel {

std::optional<Assignment> first_violation(const Magma& m, const TermProgram& lhs, const TermProgram& rhs) {
  const Op op(m);
  const int arity = std::max(lhs.arity, rhs.arity);
  const Index n = m.order();
  const auto nx = static_cast<std::int64_t>(arity > 0 ? n : 1);
  Index best = kNone;
  Assignment witness{};
#pragma omp parallel
  {
    Index local_best = kNone;
    Assignment local{};
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t x = 0; x < nx; ++x) {
      Index seen;
#pragma omp atomic read
      seen = best;
      if (static_cast<Index>(x) > seen || static_cast<Index>(x) > local_best) continue;
      if (auto v = scan_slab(lhs, rhs, op, n, arity, static_cast<Index>(x))) {
        local_best = static_cast<Index>(x);
        local = *v;
      }
    }
#pragma omp critical(ialg_first_violation)
    if (local_best < best) {
      best = local_best;
      witness = local;
    }
  }
  if (best == kNone) return std::nullopt;
  return witness;
}

std::optional<Assignment> first_nonassociative(const Magma& m) {
  return first_violation(m, assoc_lhs(), assoc_rhs());
}

std::optional<std::array<Index, 2>> first_noncommuting(const Magma& m) {
  const Op op(m);
  const auto n = static_cast<std::int64_t>(m.order());
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (op(static_cast<Index>(a), static_cast<Index>(b)) != op(static_cast<Index>(b), static_cast<Index>(a))) {
        best = std::min(best, a * n + b);
        break;
      }
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return std::array<Index, 2>{static_cast<Index>(best / n), static_cast<Index>(best % n)};
}

std::optional<std::array<Index, 2>> first_nonlatin(const Magma& m) {
  const Op op(m);
  const Index n = m.order();
  // Encode (side, index) as side * n + index so a single min gives the
  // serial answer: every failing row precedes every failing column.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel reduction(min : best)
  {
    std::vector<char> seen(n);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < 2 * static_cast<std::int64_t>(n); ++k) {
      const bool row = k < static_cast<std::int64_t>(n);
      const auto a = static_cast<Index>(row ? k : k - n);
      if (!row_is_permutation(op, n, a, row, seen)) best = std::min(best, k);
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  const bool row = best < static_cast<std::int64_t>(n);
  return std::array<Index, 2>{row ? 0u : 1u, static_cast<Index>(row ? best : best - n)};
}

std::optional<Index> identity(const Magma& m) {
  const Op op(m);
  const auto n = static_cast<std::int64_t>(m.order());
  std::int64_t best = n;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t e = 0; e < n; ++e) {
    if (is_identity(op, m.order(), static_cast<Index>(e))) best = std::min(best, e);
  }
  if (best == n) return std::nullopt;
  return static_cast<Index>(best);
}

std::optional<Index> absorber(const Magma& m) {
  const Op op(m);
  const auto n = static_cast<std::int64_t>(m.order());
  std::int64_t best = n;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t z = 0; z < n; ++z) {
    if (is_absorber(op, m.order(), static_cast<Index>(z))) best = std::min(best, z);
  }
  if (best == n) return std::nullopt;
  return static_cast<Index>(best);
}

std::uint64_t count_idempotents(const Magma& m) {
  const Op op(m);
  const auto n = static_cast<std::int64_t>(m.order());
  std::uint64_t c = 0;
#pragma omp parallel for reduction(+ : c)
  for (std::int64_t x = 0; x < n; ++x) c += op(static_cast<Index>(x), static_cast<Index>(x)) == static_cast<Index>(x);
  return c;
}

}  // namespace kernels::parallel
}  // namespace ialg
