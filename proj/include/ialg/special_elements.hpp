#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

enum class SpecialKind { zero_divisor, unit, idempotent, nilpotent, cauchy };

std::string_view to_string(SpecialKind k) noexcept;

struct SpecialElement {
  Index element = 0;
  /// Partner index (zero divisors, units) in the whole structure.
  std::optional<Index> partner;
  /// The power k (nilpotents) or the order (Cauchy).
  std::optional<std::uint64_t> power;
  /// Idempotents equal to the identity or the absorber.
  bool trivial = false;
  /// Quasi reports only: bit i set iff component i is active.
  std::optional<std::uint32_t> active_mask;
};

struct SpecialElementReport {
  SpecialKind kind = SpecialKind::idempotent;
  bool quasi = false;
  std::vector<SpecialElement> elements;
};

/// Every element of the given kind with its certificate, ascending by index.
/// ZeroDivisor and Nilpotent need an absorber (NoAbsorber), Unit and Cauchy
/// an identity (NoIdentity).
SpecialElementReport find_special(const Structure& s, SpecialKind kind);

/// Elements whose active components (mask bits, a proper nonempty subset)
/// have the kind within their component and whose other components sit at
/// that component's absorber. mask = 0 means every proper nonempty mask.
/// Throws NoAbsorberInComponent.
SpecialElementReport find_quasi_special(const Structure& s, SpecialKind kind, std::uint32_t mask = 0);

/// Re-checks the defining equation of one reported element.
bool verify_certificate(const Structure& s, SpecialKind kind, const SpecialElement& e);

struct CauchyEntry {
  Index element = 0;
  std::vector<std::uint64_t> component_orders;
  std::uint64_t standard_order = 0;  // lcm
  std::uint64_t book_order = 0;      // product
};

struct CauchyAudit {
  std::uint64_t structure_order = 0;
  /// lcm(r_i) > 1 and lcm(r_i) divides the order.
  std::vector<CauchyEntry> standard;
  /// Every r_i > 1 and prod(r_i) divides the order.
  std::vector<CauchyEntry> book;
  /// Every r_i > 1 but prod(r_i) does not divide the order.
  std::vector<CauchyEntry> book_failures;
};

/// Per-element component orders of a finite product with an identity in
/// every component. Throws NoIdentity.
CauchyAudit cauchy_audit(const Structure& s);

}  // namespace ialg
