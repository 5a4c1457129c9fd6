#pragma once

#include <cstdint>
#include <vector>

#include "ialg/numeric.hpp"
#include "ialg/structure.hpp"

namespace ialg {

enum class ZnOp { add, mul };
enum class MatrixMode { entrywise, mul };

/// How strictly new_loop validates (n, m).
enum class LoopCheck {
  strict,        // n odd > 3, 1 < m < n, gcd(m, n) = gcd(m - 1, n) = 1
  formula_only,  // n odd > 3, 1 < m < n; the result need not be a loop
};

Structure zn_semigroup(std::int64_t n, ZnOp op, Flavor flavor = Flavor::interval);

/// a * b = t·a + u·b (mod n). Throws NonResiduePair when t or u is not an integer.
Structure zn_groupoid(std::int64_t n, std::int64_t t, std::int64_t u, Flavor flavor = Flavor::interval);
Structure zn_groupoid(std::int64_t n, const Rational& t, const Rational& u, Flavor flavor = Flavor::interval);

/// The same rule over Z+ ∪ {0}, Q+ ∪ {0} or R+ ∪ {0}; element-level use only.
Structure unbounded_groupoid(NumberField field, std::int64_t t, std::int64_t u, Flavor flavor = Flavor::interval);
Structure unbounded_semigroup(NumberField field, ZnOp op, Flavor flavor = Flavor::interval);

/// L_n(m). Throws BadLoopParams naming the violated constraint.
Structure new_loop(std::int64_t n, std::int64_t m, Flavor flavor = Flavor::interval,
                   LoopCheck check = LoopCheck::strict);

/// (Z_n, +).
Structure zn_group(std::int64_t n, Flavor flavor = Flavor::interval);
/// Residues coprime to n under multiplication; Z_p \ {0} for prime p.
Structure units_group(std::int64_t n, Flavor flavor = Flavor::interval);

/// The symmetric group S_k (bijective) or full transformation monoid on k
/// points. Throws DegreeTooLarge for k > 7.
Structure sym_structure(unsigned k, bool bijective, Flavor flavor = Flavor::interval);

/// r×c matrices over a one-component base with Zmod carrier. Entrywise lifts
/// the base rule; mul is the usual product mod n and needs r = c.
Structure matrix_structure(std::size_t r, std::size_t c, const Structure& base, MatrixMode mode);

/// Componentwise product of single-component structures.
Structure product(const std::vector<Structure>& parts);

/// True iff gcd(m, n) = gcd(m - 1, n) = 1 and 1 < m < n, n odd > 3.
bool valid_loop_params(std::int64_t n, std::int64_t m) noexcept;

/// All m with valid_loop_params(n, m), ascending.
std::vector<std::int64_t> valid_loop_multipliers(std::int64_t n);

}  // namespace ialg
