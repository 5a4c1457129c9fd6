#include "ialg/identities.hpp"

#include <algorithm>
#include <cctype>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

Term Term::var(int v) {
  if (v < 0 || v > 2) throw Error(ErrorKind::InvalidArgument, "variables are x, y and z");
  Term t;
  t.var_ = v;
  return t;
}

Term operator*(const Term& a, const Term& b) {
  Term t;
  t.left_ = std::make_shared<const Term>(a);
  t.right_ = std::make_shared<const Term>(b);
  return t;
}

int Term::depth() const noexcept {
  return is_var() ? 0 : 1 + std::max(left_->depth(), right_->depth());
}

unsigned Term::variables() const noexcept {
  return is_var() ? 1u << var_ : left_->variables() | right_->variables();
}

TermProgram Term::compile() const {
  TermProgram p;
  auto emit = [&p](const Term& t, auto&& self) -> void {
    if (t.is_var()) {
      p.code.push_back(static_cast<std::int8_t>(t.var_));
      p.arity = std::max(p.arity, t.var_ + 1);
      return;
    }
    self(*t.left_, self);
    self(*t.right_, self);
    p.code.push_back(TermProgram::kApply);
  };
  emit(*this, emit);
  return p;
}

std::string Term::render() const {
  static constexpr const char* kNames[] = {"x", "y", "z"};
  if (is_var()) return kNames[var_];
  auto side = [](const Term& t) { return t.is_var() ? t.render() : "(" + t.render() + ")"; };
  return side(*left_) + "·" + side(*right_);
}

bool operator==(const Term& a, const Term& b) {
  if (a.is_var() || b.is_var()) return a.var_ == b.var_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = [] {
    const Term x = Term::x();
    const Term y = Term::y();
    const Term z = Term::z();
    return std::vector<Identity>{
        {"commutative", x * y, y * x, {}},
        {"idempotent-law", x * x, x, {"idempotent"}},
        {"associative", (x * y) * z, x * (y * z), {"is-semigroup"}},
        {"left-alternative", (x * x) * y, x * (x * y), {}},
        {"right-alternative", (y * x) * x, y * (x * x), {}},
        {"P-identity", (x * y) * x, x * (y * x), {"p"}},
        {"Bol-as-printed", ((x * y) * z) * x, x * ((y * z) * x), {"bol"}},
        {"Moufang", (x * y) * (z * x), (x * (y * z)) * x, {}},
        {"bol-left", x * (y * (x * z)), (x * (y * x)) * z, {}},
        {"bol-right", ((z * x) * y) * x, z * ((x * y) * x), {}},
    };
  }();
  return entries;
}

const Identity& lookup_identity(const std::string& name) {
  auto fold = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  const std::string key = fold(name);
  for (const auto& id : catalog()) {
    if (fold(id.name) == key) return id;
    for (const auto& a : id.aliases) {
      if (fold(a) == key) return id;
    }
  }
  throw Error(ErrorKind::UndefinedName, "unknown identity '" + name + "'");
}

std::string_view to_string(Grade g) noexcept {
  switch (g) {
    case Grade::strong: return "Strong";
    case Grade::smarandache: return "Smarandache";
    case Grade::quasi_smarandache: return "QuasiSmarandache";
    case Grade::fails: return "Fails";
  }
  return "Fails";
}

namespace {

std::uint64_t assignments(Index order, unsigned vars) {
  std::uint64_t n = 1;
  for (unsigned v = vars; v; v >>= 1) {
    if (v & 1u) n *= order;
  }
  return n;
}

}  // namespace

IdentityVerdict check_identity(const Magma& m, const Identity& id) {
  IdentityVerdict v;
  const TermProgram lhs = id.lhs.compile();
  const TermProgram rhs = id.rhs.compile();
  v.counterexample = kernels::first_violation(m, lhs, rhs);
  v.grade = v.counterexample ? Grade::fails : Grade::strong;
  v.checked = assignments(m.order(), id.lhs.variables() | id.rhs.variables());
  return v;
}

IdentityVerdict check_identity(const Structure& s, const Identity& id) {
  if (!s.is_product()) return check_identity(*s.component_magma(0), id);
  IdentityVerdict total;
  total.grade = Grade::strong;
  const auto whole = s.magma();
  for (std::size_t i = 0; i < s.arity(); ++i) {
    const auto v = check_identity(*s.component_magma(i), id);
    total.checked += v.checked;
    if (v.counterexample && !total.counterexample) {
      Assignment a{};
      for (std::size_t var = 0; var < 3; ++var) {
        std::vector<Index> parts(s.arity(), 0);
        parts[i] = (*v.counterexample)[var];
        a[var] = whole->join(parts);
      }
      total.counterexample = a;
      total.grade = Grade::fails;
    }
  }
  return total;
}

IdentityVerdict s_check_identity(const Structure& s, const Identity& id) {
  IdentityVerdict v = check_identity(s, id);
  if (v.grade == Grade::strong) return v;
  const TermProgram lhs = id.lhs.compile();
  const TermProgram rhs = id.rhs.compile();
  auto holds = [&](const Magma& sub) { return !kernels::serial::first_violation(sub, lhs, rhs); };
  std::size_t hits = 0;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    const auto m = s.component_magma(i);
    auto w = first_witness(*m, 2, holds);
    // A component that satisfies the identity outright contributes itself
    // when it has no proper witness.
    if (!w && holds(*m)) {
      std::vector<Index> all(m->order());
      for (Index k = 0; k < m->order(); ++k) all[k] = k;
      w = std::move(all);
    }
    hits += w.has_value();
    v.witness.push_back(std::move(w));
  }
  if (hits == s.arity()) {
    v.grade = Grade::smarandache;
  } else if (hits > 0) {
    v.grade = Grade::quasi_smarandache;
  } else {
    v.witness.clear();
  }
  return v;
}

std::optional<bool> predict_zn(const std::string& id_name, std::int64_t n, std::int64_t t, std::int64_t u) {
  if (n < 1) return std::nullopt;
  const std::string name = lookup_identity(id_name).name;
  t = mod(t, n);
  u = mod(u, n);
  auto divides = [n](std::int64_t v) { return mod(v, n) == 0; };
  if (name == "idempotent-law") return divides(t + u - 1);
  if (name == "commutative") return t == u;
  if (divides(t + u - 1)) {
    if (name == "left-alternative" || name == "right-alternative" || name == "Moufang") {
      return divides(mulmod(t, t, n) - t);
    }
    if (name == "P-identity") return true;
    if (name == "Bol-as-printed") return divides(mulmod(mulmod(t, t, n), mod(t - 1, n), n));
  }
  if (t == 0 || u == 0) {
    const std::int64_t k = t == 0 ? u : t;
    if (name == "P-identity" || name == "left-alternative" || name == "right-alternative") {
      return divides(mulmod(k, k, n) - k);
    }
  }
  return std::nullopt;
}

}  // namespace ialg
