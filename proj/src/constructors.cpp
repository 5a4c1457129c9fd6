#include "ialg/constructors.hpp"

#include "ialg/error.hpp"

namespace ialg {

namespace {

std::string zn_name(std::int64_t n) { return "Z_" + std::to_string(n); }

Component single(Carrier carrier, OpRule rule, Flavor flavor, std::string name) {
  return Component{std::move(carrier), std::move(rule), flavor, std::move(name)};
}

}  // namespace

Structure zn_semigroup(std::int64_t n, ZnOp op, Flavor flavor) {
  if (n < 1) throw Error(ErrorKind::BadN, "Z_n requires n >= 1");
  const std::string name = zn_name(n) + (op == ZnOp::add ? "(+)" : "(x)");
  return Structure(name, {single(Carrier::zmod(n), op == ZnOp::add ? OpRule::add() : OpRule::mul(), flavor, name)});
}

Structure zn_groupoid(std::int64_t n, std::int64_t t, std::int64_t u, Flavor flavor) {
  if (n < 2) throw Error(ErrorKind::BadN, "a groupoid Z_n(t,u) needs n >= 2");
  const std::int64_t rt = mod(t, n);
  const std::int64_t ru = mod(u, n);
  const std::string name = zn_name(n) + "(" + std::to_string(rt) + "," + std::to_string(ru) + ")";
  return Structure(name, {single(Carrier::zmod(n), OpRule::groupoid(rt, ru), flavor, name)});
}

Structure zn_groupoid(std::int64_t n, const Rational& t, const Rational& u, Flavor flavor) {
  if (!t.is_integer() || !u.is_integer()) {
    throw Error(ErrorKind::NonResiduePair, "(" + to_string(t) + ", " + to_string(u) +
                                               ") is not a pair of residues; products leave Z_" +
                                               std::to_string(n));
  }
  return zn_groupoid(n, t.num, u.num, flavor);
}

Structure unbounded_groupoid(NumberField field, std::int64_t t, std::int64_t u, Flavor flavor) {
  const Carrier c = Carrier::unbounded(field);
  const std::string name = c.describe() + "(" + std::to_string(t) + "," + std::to_string(u) + ")";
  return Structure(name, {single(c, OpRule::groupoid(t, u), flavor, name)});
}

Structure unbounded_semigroup(NumberField field, ZnOp op, Flavor flavor) {
  const Carrier c = Carrier::unbounded(field);
  const std::string name = c.describe() + (op == ZnOp::add ? "(+)" : "(x)");
  return Structure(name, {single(c, op == ZnOp::add ? OpRule::add() : OpRule::mul(), flavor, name)});
}

bool valid_loop_params(std::int64_t n, std::int64_t m) noexcept {
  return n > 3 && n % 2 == 1 && m > 1 && m < n && gcd(m, n) == 1 && gcd(m - 1, n) == 1;
}

std::vector<std::int64_t> valid_loop_multipliers(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 2; m < n; ++m) {
    if (valid_loop_params(n, m)) out.push_back(m);
  }
  return out;
}

Structure new_loop(std::int64_t n, std::int64_t m, Flavor flavor, LoopCheck check) {
  const std::string tag = "L_" + std::to_string(n) + "(" + std::to_string(m) + ")";
  if (n <= 3 || n % 2 == 0) throw Error(ErrorKind::BadLoopParams, tag + ": n must be odd and greater than 3");
  if (n > static_cast<std::int64_t>(max_order())) {
    throw Error(ErrorKind::OrderTooLarge, tag + ": order exceeds the cap of " + std::to_string(max_order()));
  }
  if (m <= 1 || m >= n) throw Error(ErrorKind::BadLoopParams, tag + ": m must satisfy 1 < m < n");
  if (check == LoopCheck::strict) {
    if (gcd(m, n) != 1) {
      throw Error(ErrorKind::BadLoopParams, tag + ": gcd(m, n) = " + std::to_string(gcd(m, n)) + ", not 1");
    }
    if (gcd(m - 1, n) != 1) {
      throw Error(ErrorKind::BadLoopParams,
                  tag + ": gcd(m - 1, n) = " + std::to_string(gcd(m - 1, n)) + ", not 1");
    }
  }
  return Structure(tag, {single(Carrier::loop_set(static_cast<std::uint32_t>(n)), OpRule::loop(m), flavor, tag)});
}

Structure zn_group(std::int64_t n, Flavor flavor) {
  return zn_semigroup(n, ZnOp::add, flavor);
}

Structure units_group(std::int64_t n, Flavor flavor) {
  if (n < 2) throw Error(ErrorKind::BadN, "the units group needs n >= 2");
  const std::string name = "U(" + std::to_string(n) + ")";
  return Structure(name, {single(Carrier::units(n), OpRule::mul(), flavor, name)});
}

Structure sym_structure(unsigned k, bool bijective, Flavor flavor) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  if (k > 7) throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(k) + " exceeds the guard of 7");
  const std::string name = (bijective ? "S_" : "T_") + std::to_string(k);
  return Structure(name, {single(Carrier::maps(k, bijective), OpRule::compose(), flavor, name)});
}

Structure matrix_structure(std::size_t r, std::size_t c, const Structure& base, MatrixMode mode) {
  if (base.is_product()) throw Error(ErrorKind::UnsupportedBase, "matrix base must have one component");
  const Component& b = base.components().front();
  const auto* z = b.carrier.get_if<Carrier::Zmod>();
  if (r == 0 || c == 0) throw Error(ErrorKind::InvalidArgument, "matrices need at least one row and column");
  std::string name = std::to_string(r) + "x" + std::to_string(c) + " over " + base.name();
  if (mode == MatrixMode::mul) {
    if (r != c) throw Error(ErrorKind::NonSquareMul, "matrix multiplication needs r = c");
    if (!z) throw Error(ErrorKind::UnsupportedBase, "matrix multiplication needs a Z_n base");
    return Structure(name + " (mul)",
                     {single(Carrier::matrix(r, c, b.carrier), OpRule::matrix_mul(z->n), b.flavor, name)});
  }
  if (!z) throw Error(ErrorKind::UnsupportedBase, "entrywise matrices need a Z_n base");
  return Structure(name, {single(Carrier::matrix(r, c, b.carrier), OpRule::entrywise(b.rule), b.flavor, name)});
}

Structure product(const std::vector<Structure>& parts) {
  if (parts.size() < 2) throw Error(ErrorKind::ArityMismatch, "a product needs at least two components");
  std::vector<Component> components;
  std::string name;
  for (const auto& p : parts) {
    if (p.is_product()) throw Error(ErrorKind::ArityMismatch, "product components must be single structures");
    if (!name.empty()) name += " U ";
    name += p.name();
    components.push_back(p.components().front());
  }
  return Structure(name, std::move(components));
}

}  // namespace ialg
