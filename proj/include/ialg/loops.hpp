#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

/// H_i(t) = {e, i, i+t, ..., i+(n/t - 1)t} inside L_n(m), as loop indices.
struct SubloopFamilyMember {
  std::uint32_t t = 0;
  std::uint32_t base = 0;
  std::vector<Index> members;  // ascending; index 0 is e
  bool closed = false;
  bool is_loop = false;
};

/// Members of H_i(t) for every divisor 1 < t < n and base 1 <= i <= t, each
/// checked for closure and the loop property in `loop`.
std::vector<SubloopFamilyMember> loop_subloop_family(const Magma& loop, std::uint32_t n);

/// The set {e, i, i+t, ...} without any checks.
std::vector<Index> subloop_family_set(std::uint32_t n, std::uint32_t t, std::uint32_t base);

struct Normalizers {
  std::vector<Index> first;   // {j : j·H = H·j}
  std::vector<Index> second;  // {j : (j·H)·j⁻¹ = H}, j⁻¹ the right inverse
  bool equal = false;
};

/// Throws NotLatin when right inverses are missing.
Normalizers normalizers(const Magma& loop, const std::vector<Index>& h);

struct LoopCenters {
  std::vector<Index> commutant;
  std::vector<Index> left_nucleus;
  std::vector<Index> middle_nucleus;
  std::vector<Index> right_nucleus;
  std::vector<Index> nucleus;
  std::vector<Index> center;
  std::vector<Index> moufang_center;
};

LoopCenters loop_centers(const Magma& loop);

struct DerivedSubloops {
  std::vector<Index> commutator;
  std::vector<Index> associator;
};

/// Closures of {e} with all commutators c (x·y = (y·x)·c) and associators a
/// ((x·y)·z = (x·(y·z))·a) of elements drawn from `within` (default: all).
/// Throws NotLatin when right division is not unique.
DerivedSubloops derived_subloops(const Magma& loop, const std::optional<std::vector<Index>>& within = std::nullopt);

/// x ∘ y = R_b⁻¹(x) · L_a⁻¹(y); its identity is a·b. Throws NotLatin.
MagmaPtr principal_isotope(const Magma& loop, Index a, Index b);

struct IsotopeMatch {
  Index a = 0;
  Index b = 0;
  /// Cells (row, column) where the isotope differs from the target.
  std::vector<std::pair<Index, Index>> mismatches;
};

/// Tries every (a, b) and returns the pairs with the fewest mismatches
/// against `target` (row-major |L|×|L| indices), ascending by (a, b).
std::vector<IsotopeMatch> isotope_search(const Magma& loop, const std::vector<Index>& target);

/// x·H = H·x, (x·y)·H = x·(y·H) and (H·x)·y = H·(x·y) for all x, y.
bool is_normal_subloop(const Magma& loop, const std::vector<Index>& h);

}  // namespace ialg
