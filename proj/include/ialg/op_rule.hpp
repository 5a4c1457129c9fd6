#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ialg/carrier.hpp"
#include "ialg/element.hpp"

namespace ialg {

/// The binary operation of one component.
struct OpRule {
  struct AddMod {};
  struct MulMod {};
  /// a * b = t·a + u·b (mod n), residues already reduced.
  struct GroupoidPair {
    std::int64_t t;
    std::int64_t u;
  };
  /// i * j = m·j − (m−1)·i (mod n) with 0 ↦ n, i * i = e, e the identity.
  struct LoopRule {
    std::int64_t m;
  };
  /// Left-to-right composition: (f·g)(x) = g(f(x)).
  struct Compose {};
  struct EntrywiseOf {
    std::shared_ptr<const OpRule> inner;
  };
  struct MatrixMulMod {
    std::int64_t n;
  };
  struct Componentwise {
    std::vector<OpRule> parts;
  };

  std::variant<AddMod, MulMod, GroupoidPair, LoopRule, Compose, EntrywiseOf, MatrixMulMod,
               Componentwise>
      kind;

  static OpRule add() { return {AddMod{}}; }
  static OpRule mul() { return {MulMod{}}; }
  static OpRule groupoid(std::int64_t t, std::int64_t u) { return {GroupoidPair{t, u}}; }
  static OpRule loop(std::int64_t m) { return {LoopRule{m}}; }
  static OpRule compose() { return {Compose{}}; }
  static OpRule entrywise(OpRule inner) {
    return {EntrywiseOf{std::make_shared<const OpRule>(std::move(inner))}};
  }
  static OpRule matrix_mul(std::int64_t n) { return {MatrixMulMod{n}}; }
  static OpRule componentwise(std::vector<OpRule> parts) { return {Componentwise{std::move(parts)}}; }

  template <class T>
  const T* get_if() const noexcept { return std::get_if<T>(&kind); }

  std::string describe() const;
};

/// The L_n(m) product on point indices 0 (= e), 1..n.
constexpr std::uint32_t loop_product(std::uint32_t n, std::int64_t m, std::uint32_t i,
                                     std::uint32_t j) noexcept {
  if (i == 0) return j;
  if (j == 0) return i;
  if (i == j) return 0;
  const std::int64_t nn = n;
  std::int64_t r = (m * static_cast<std::int64_t>(j) - (m - 1) * static_cast<std::int64_t>(i)) % nn;
  if (r < 0) r += nn;
  return r == 0 ? n : static_cast<std::uint32_t>(r);
}

/// Element-level application; works on every carrier including the
/// unbounded ones. Throws CarrierMismatch for foreign operands and
/// ClosureViolation if the result leaves the carrier.
Element apply(const OpRule& rule, const Carrier& carrier, const Element& a, const Element& b);

}  // namespace ialg
