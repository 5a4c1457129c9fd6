#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ialg/magma.hpp"

namespace ialg {

/// A term over x, y, z in postfix form: 0..2 push a variable, kApply pops two
/// operands and pushes their product.
struct TermProgram {
  static constexpr std::int8_t kApply = -1;
  std::vector<std::int8_t> code;
  int arity = 0;  // 1 + highest variable used

  Index eval(const Magma& m, const std::array<Index, 3>& env) const;
};

using Assignment = std::array<Index, 3>;

namespace kernels {

// Every kernel returns the same answer in both namespaces; the parallel
// versions reduce to the lexicographically smallest witness so results do
// not depend on the schedule.

namespace serial {
std::optional<Assignment> first_violation(const Magma& m, const TermProgram& lhs, const TermProgram& rhs);
std::optional<Assignment> first_nonassociative(const Magma& m);
std::optional<std::array<Index, 2>> first_noncommuting(const Magma& m);
/// First (row or column, index) that is not a permutation, encoded as
/// {0 = row | 1 = column, index}; nullopt when latin.
std::optional<std::array<Index, 2>> first_nonlatin(const Magma& m);
std::optional<Index> identity(const Magma& m);
std::optional<Index> absorber(const Magma& m);
std::uint64_t count_idempotents(const Magma& m);
}  // namespace serial

namespace parallel {
std::optional<Assignment> first_violation(const Magma& m, const TermProgram& lhs, const TermProgram& rhs);
std::optional<Assignment> first_nonassociative(const Magma& m);
std::optional<std::array<Index, 2>> first_noncommuting(const Magma& m);
std::optional<std::array<Index, 2>> first_nonlatin(const Magma& m);
std::optional<Index> identity(const Magma& m);
std::optional<Index> absorber(const Magma& m);
std::uint64_t count_idempotents(const Magma& m);
}  // namespace parallel

/// Below this order the OpenMP region costs more than the scan.
inline constexpr Index kParallelThreshold = 64;

inline std::optional<Assignment> first_violation(const Magma& m, const TermProgram& lhs, const TermProgram& rhs) {
  return m.order() >= kParallelThreshold ? parallel::first_violation(m, lhs, rhs)
                                         : serial::first_violation(m, lhs, rhs);
}
inline std::optional<Assignment> first_nonassociative(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::first_nonassociative(m) : serial::first_nonassociative(m);
}
inline std::optional<std::array<Index, 2>> first_noncommuting(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::first_noncommuting(m) : serial::first_noncommuting(m);
}
inline std::optional<std::array<Index, 2>> first_nonlatin(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::first_nonlatin(m) : serial::first_nonlatin(m);
}
inline std::optional<Index> identity(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::identity(m) : serial::identity(m);
}
inline std::optional<Index> absorber(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::absorber(m) : serial::absorber(m);
}
inline std::uint64_t count_idempotents(const Magma& m) {
  return m.order() >= kParallelThreshold ? parallel::count_idempotents(m) : serial::count_idempotents(m);
}

}  // namespace kernels
}  // namespace ialg
