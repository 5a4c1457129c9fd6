#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ialg/carrier.hpp"
#include "ialg/element.hpp"
#include "ialg/op_rule.hpp"

namespace ialg {

using Index = std::uint32_t;

class Magma;
using MagmaPtr = std::shared_ptr<const Magma>;

/// Row-major |S|×|S| table of element indices.
struct CayleyTable {
  Index order = 0;
  std::vector<Index> cells;

  Index at(Index a, Index b) const noexcept { return cells[static_cast<std::size_t>(a) * order + b]; }
};

/// A finite binary operation addressed by element index. The operation is
/// computed directly on indices; the Cayley table is built on first request
/// and shared afterwards.
class Magma {
 public:
  /// Tables are materialized eagerly by kernels only up to this order.
  static constexpr Index kTableLimit = 2048;

  /// Realizes `rule` over a finite carrier. Throws InfiniteCarrier or
  /// OrderTooLarge; closure is checked lazily by classify/tests.
  static MagmaPtr from_rule(const Carrier& carrier, const OpRule& rule, Flavor flavor);

  /// Componentwise product of already realized magmas.
  static MagmaPtr product(std::vector<MagmaPtr> parts);

  /// A magma given only by its table; `labels` names each index.
  static MagmaPtr from_table(CayleyTable table, std::vector<std::string> labels);

  /// The operation restricted to `members` (must be closed). Element i of the
  /// result is members[i] of this magma.
  MagmaPtr restrict_to(const std::vector<Index>& members) const;

  Index order() const noexcept { return order_; }
  Index op(Index a, Index b) const;

  /// Materializes (once) and returns the Cayley table.
  const CayleyTable& table() const;
  /// The table if it is already built or cheap enough to build now.
  const CayleyTable* table_if_small() const;

  std::string label(Index i) const;
  std::vector<std::string> labels() const;

  /// Element-level access; only for magmas built from a carrier.
  const std::optional<Carrier>& carrier() const noexcept { return carrier_; }
  const std::optional<OpRule>& rule() const noexcept { return rule_; }
  Element element(Index i) const;
  Index index_of(const Element& e) const;

  Flavor flavor() const noexcept { return flavor_; }
  const std::vector<MagmaPtr>& parts() const noexcept { return parts_; }
  bool is_product() const noexcept { return !parts_.empty(); }

  /// Mixed-radix split of a product index into component indices.
  std::vector<Index> split(Index i) const;
  Index join(const std::vector<Index>& components) const;

  Magma(Index order, std::function<Index(Index, Index)> op);

 private:
  Index order_;
  std::function<Index(Index, Index)> op_;
  std::optional<Carrier> carrier_;
  std::optional<OpRule> rule_;
  Flavor flavor_ = Flavor::interval;
  std::vector<MagmaPtr> parts_;
  std::vector<std::string> fixed_labels_;

  mutable std::once_flag table_once_;
  mutable CayleyTable table_;
};

}  // namespace ialg
