#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

/// A closed subset of one magma, members ascending by index.
struct Subset {
  std::vector<Index> members;
  StructureClass cls;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Subset& a, const Subset& b) { return a.members == b.members; }
};

/// For products, one subset per component.
struct Substructure {
  std::vector<Subset> parts;

  std::uint64_t order() const;
  std::vector<std::vector<std::string>> labels(const Structure& parent) const;
};

/// Least closed superset of `seed`. Throws InvalidArgument for an empty or
/// out-of-range seed.
std::vector<Index> closure(const Magma& m, const std::vector<Index>& seed);

/// Least closed superset, componentwise for products: seed[i] seeds component i.
Substructure closure(const Structure& s, const std::vector<std::vector<Index>>& seed);

struct EnumerationOptions {
  std::optional<ClassLabel> class_filter;
  std::size_t max_size = SIZE_MAX;
  /// Closures of every seed of at most this many elements are explored.
  unsigned max_seed = 2;
  /// Orders up to this value are searched over the full power set.
  Index powerset_limit = 12;
  /// Keep the whole set and trivial singletons; off by default.
  bool include_trivial = false;
};

struct Enumeration {
  std::vector<Subset> found;
  /// False when the search was limited by max_seed rather than exhaustive.
  bool complete = true;
};

/// "Proper nontrivial": not the whole set, not empty, and not a singleton
/// holding only an identity or absorbing element.
bool proper_nontrivial(const Magma& m, const std::vector<Index>& members);

/// Distinct closed subsets of one magma, sorted by (size, members).
Enumeration enumerate_substructures(const Magma& m, const EnumerationOptions& options = {});

/// For products: the componentwise cross of component substructures, each
/// part proper and nontrivial in its own component.
struct ProductEnumeration {
  std::vector<Substructure> found;
  bool complete = true;
};
ProductEnumeration enumerate_substructures(const Structure& s, const EnumerationOptions& options = {});

enum class Side { left, right, two_sided };

std::string_view to_string(Side side) noexcept;

/// Every nonempty P with s·p ∈ P (left), p·s ∈ P (right) or both, for all s.
/// Returned as sorted member lists, ordered by (size, members). Exhaustive
/// over generated ideals: every ideal is a union of principal ideals, and
/// all unions are formed.
std::vector<std::vector<Index>> enumerate_ideals(const Magma& m, Side side);

/// Ideals of a product: the cross of per-component ideals.
std::vector<std::vector<std::vector<Index>>> enumerate_ideals(const Structure& s, Side side);

/// Whether `members` is a left/right/two-sided ideal.
bool is_ideal(const Magma& m, const std::vector<Index>& members, Side side);

/// Seed search used for Smarandache witnesses: closures of singletons, then
/// pairs, in descending index order; the first closure that is proper, has at
/// least `min_size` elements and passes `accept` wins.
std::optional<std::vector<Index>> first_witness(const Magma& m, std::size_t min_size,
                                                const std::function<bool(const Magma&)>& accept);

enum class WitnessGrade { smarandache, quasi_smarandache, none };

struct WitnessResult {
  WitnessGrade grade = WitnessGrade::none;
  /// The class the witness must have (group for semigroups and loops,
  /// semigroup for groupoids).
  std::vector<ClassLabel> wanted;
  /// One entry per component; nullopt where none was found.
  std::vector<std::optional<Subset>> parts;
};

WitnessResult smarandache_witness(const Structure& s);

enum class SimpleMode { substructure, ideal };

/// True iff no proper nontrivial substructure (or ideal) exists. A product
/// has one only if every component does, so it is simple iff some
/// component is.
bool is_simple(const Structure& s, SimpleMode mode);
bool is_simple(const Magma& m, SimpleMode mode);

enum class LagrangeGrade { lagrange, weakly_lagrange, neither };

std::string_view to_string(LagrangeGrade grade) noexcept;

struct LagrangeEntry {
  Substructure sub;
  std::uint64_t order;
  bool divides;
};

struct LagrangeReport {
  std::uint64_t structure_order = 0;
  std::vector<LagrangeEntry> entries;
  LagrangeGrade grade = LagrangeGrade::neither;
  bool complete = true;
};

/// Divisibility of every enumerated proper substructure order into the
/// structure order. `candidates`, when given, are validated (closed) and
/// audited alongside the enumerated ones.
LagrangeReport lagrange_audit(const Structure& s, const EnumerationOptions& options = {},
                              const std::vector<Substructure>& candidates = {});

struct SylowReport {
  std::uint64_t p = 0;
  std::uint64_t structure_order = 0;
  /// Largest k with a substructure of order p^k.
  unsigned max_k = 0;
  std::vector<Substructure> witnesses;  // order p^max_k
  bool divides = false;                 // p^k | order
  bool maximal = false;                 // p^(k+1) does not divide order
  bool complete = true;
};

SylowReport sylow_audit(const Structure& s, std::uint64_t p, const EnumerationOptions& options = {});

}  // namespace ialg
