#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ialg/element.hpp"

namespace ialg {

/// Enumeration cap for any single carrier. Defaults to the IALG_MAX_ORDER
/// environment variable, or 10^6 when unset.
std::uint64_t max_order();
void set_max_order(std::uint64_t cap);

/// Describes a set of elements. Enumeration order (and therefore every table
/// and index) is fixed: residues ascending, loop points e,1..n, maps in
/// lexicographic image order, matrices and tuples lexicographic with the first
/// cell / component most significant.
struct Carrier {
  struct Zmod {
    std::int64_t n;
  };
  /// The residues coprime to n, ascending.
  struct ZmodUnits {
    std::int64_t n;
  };
  struct LoopSet {
    std::uint32_t n;
  };
  struct Maps {
    unsigned k;
    bool bijective;
  };
  struct MatrixOf {
    std::size_t rows;
    std::size_t cols;
    std::shared_ptr<const Carrier> inner;
  };
  struct TupleOf {
    std::vector<Carrier> parts;
  };
  struct UnboundedNonneg {
    NumberField field;
  };

  std::variant<Zmod, ZmodUnits, LoopSet, Maps, MatrixOf, TupleOf, UnboundedNonneg> kind;

  static Carrier zmod(std::int64_t n);
  static Carrier units(std::int64_t n);
  static Carrier loop_set(std::uint32_t n);
  static Carrier maps(unsigned k, bool bijective);
  static Carrier matrix(std::size_t rows, std::size_t cols, Carrier inner);
  static Carrier tuple(std::vector<Carrier> parts);
  static Carrier unbounded(NumberField field);

  template <class T>
  const T* get_if() const noexcept { return std::get_if<T>(&kind); }

  /// False iff an UnboundedNonneg appears anywhere in the tree.
  bool enumerable() const;

  /// Exact cardinality; throws InfiniteCarrier, or OrderTooLarge on overflow.
  std::uint64_t size() const;

  /// Like size() but also enforces max_order().
  std::uint64_t checked_size() const;

  Element element_at(std::uint64_t index) const;
  /// Throws CarrierMismatch when `e` is not a member.
  std::uint64_t index_of(const Element& e) const;
  bool contains(const Element& e) const;

  std::string describe() const;
};

/// Every element exactly once, in carrier order.
std::vector<Element> enumerate(const Carrier& carrier);

/// Residues coprime to n, ascending (n >= 2; units(1) = {0}).
std::vector<std::int64_t> unit_residues(std::int64_t n);

/// Lexicographic rank / unrank of permutations of {1..k} (1-based images).
std::uint64_t permutation_rank(const std::vector<std::uint8_t>& images);
std::vector<std::uint8_t> permutation_unrank(std::uint64_t rank, unsigned k);

}  // namespace ialg
