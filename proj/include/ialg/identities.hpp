#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ialg/kernels.hpp"
#include "ialg/structure.hpp"
#include "ialg/substructures.hpp"

namespace ialg {

/// A term over x, y, z built with the binary operation.
class Term {
 public:
  static Term var(int v);
  static Term x() { return var(0); }
  static Term y() { return var(1); }
  static Term z() { return var(2); }
  friend Term operator*(const Term& a, const Term& b);

  bool is_var() const noexcept { return var_ >= 0; }
  int variable() const noexcept { return var_; }
  const Term& left() const { return *left_; }
  const Term& right() const { return *right_; }

  int depth() const noexcept;
  /// Bit v set iff variable v occurs.
  unsigned variables() const noexcept;
  TermProgram compile() const;
  std::string render() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  int var_ = -1;
  std::shared_ptr<const Term> left_;
  std::shared_ptr<const Term> right_;
};

struct Identity {
  std::string name;
  Term lhs;
  Term rhs;
  std::vector<std::string> aliases;

  std::string render() const { return lhs.render() + " = " + rhs.render(); }
};

/// The named identities, in a fixed order.
const std::vector<Identity>& catalog();

/// Case-insensitive lookup by name or alias; throws UndefinedName.
const Identity& lookup_identity(const std::string& name);

enum class Grade { strong, smarandache, quasi_smarandache, fails };

std::string_view to_string(Grade g) noexcept;

struct IdentityVerdict {
  Grade grade = Grade::fails;
  /// Fails: the reproducing assignment (x, y, z) as element indices of the
  /// whole structure; unused variables are 0.
  std::optional<Assignment> counterexample;
  /// Smarandache grades: one witness subset per component (nullopt where
  /// that component has none).
  std::vector<std::optional<std::vector<Index>>> witness;
  std::uint64_t checked = 0;
};

/// Exhaustive over all assignments of the identity's variables. Grade is
/// strong or fails; the counterexample is the lexicographically first one.
IdentityVerdict check_identity(const Magma& m, const Identity& id);

/// For products the counterexample comes from the lowest-index failing
/// component, with the other components at index 0.
IdentityVerdict check_identity(const Structure& s, const Identity& id);

/// Strong if the whole structure satisfies the identity; otherwise a
/// witness per component: a closed proper subset of size >= 2 satisfying it.
IdentityVerdict s_check_identity(const Structure& s, const Identity& id);

/// Closed-form verdicts for Z_n(t, u) groupoids, where one is known.
std::optional<bool> predict_zn(const std::string& id_name, std::int64_t n, std::int64_t t, std::int64_t u);

}  // namespace ialg
