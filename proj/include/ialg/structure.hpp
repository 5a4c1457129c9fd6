#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ialg/carrier.hpp"
#include "ialg/element.hpp"
#include "ialg/magma.hpp"
#include "ialg/op_rule.hpp"

namespace ialg {

struct Component {
  Carrier carrier;
  OpRule rule;
  Flavor flavor = Flavor::interval;
  std::string name;
};

/// One or more components with a componentwise operation. One component is
/// a plain structure, two a bistructure, n an n-structure.
class Structure {
 public:
  Structure(std::string name, std::vector<Component> components);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t arity() const noexcept { return components_.size(); }
  bool is_product() const noexcept { return components_.size() > 1; }
  bool finite() const;

  /// Realized magma of component i, built on first use.
  MagmaPtr component_magma(std::size_t i) const;
  /// The whole structure; for products, the componentwise product magma.
  MagmaPtr magma() const;

  /// Element-level product, defined on infinite carriers too. For products
  /// the elements are tuples with one part per component.
  Element apply(const Element& a, const Element& b) const;

 private:
  struct Cache;
  std::string name_;
  std::vector<Component> components_;
  std::shared_ptr<Cache> cache_;
};

/// Product of the cardinalities of all components.
std::uint64_t order_of(const Structure& s);

enum class ClassLabel { groupoid, semigroup, monoid, group, quasigroup, loop };

std::string_view to_string(ClassLabel label) noexcept;

struct StructureClass {
  bool closed = false;
  bool associative = false;
  bool has_identity = false;
  bool all_invertible = false;
  bool latin_square = false;
  bool commutative = false;
  ClassLabel label = ClassLabel::groupoid;
};

/// All flags by exhaustive scan; the label is the richest class they allow.
StructureClass classify(const Magma& m);
/// Each flag of a product holds iff it holds in every component, so the
/// product is classified without scanning its own table.
StructureClass classify(const Structure& s);
/// The richest class the flags allow.
ClassLabel label_for(const StructureClass& c) noexcept;

/// Per-component labels joined with " × ", prefixed "quasi " when the
/// components mix interval and plain flavors.
std::string structure_label(const Structure& s);

std::optional<Index> identity_of(const Magma& m);
std::optional<Index> absorbing_element(const Magma& m);

/// x^k with left powers: x^1 = x, x^(k+1) = x · x^k.
Index left_power(const Magma& m, Index x, std::uint64_t k);

/// Least k >= 1 with x^k = identity, or nullopt if none within |S| steps.
/// Throws NoIdentity.
std::optional<std::uint64_t> element_order(const Magma& m, Index x);

}  // namespace ialg
