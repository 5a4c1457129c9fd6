#include "ialg/audit.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>

#include "ialg/constructors.hpp"
#include "ialg/error.hpp"
#include "ialg/identities.hpp"
#include "ialg/kernels.hpp"
#include "ialg/loops.hpp"
#include "ialg/numeric.hpp"
#include "ialg/op_rule.hpp"
#include "ialg/special_elements.hpp"
#include "ialg/substructures.hpp"

namespace ialg {

using nlohmann::json;

// ---------------------------------------------------------------- params

json to_json(const Params& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

namespace {

std::int64_t get(const Params& p, std::string_view key) {
  for (const auto& [k, v] : p) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "missing parameter " + std::string(key));
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::ParseError, "bad number '" + text + "' in range '" + context + "'");
  }
  return v;
}

}  // namespace

RangeSpec RangeSpec::parse(const std::string& text) {
  RangeSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=lo..hi in '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (key.empty()) throw Error(ErrorKind::ParseError, "empty key in '" + item + "'");
    const auto dots = value.find("..");
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    if (dots == std::string::npos) {
      lo = hi = parse_int(value, text);
    } else {
      lo = parse_int(trim(value.substr(0, dots)), text);
      hi = parse_int(trim(value.substr(dots + 2)), text);
    }
    if (lo > hi) throw Error(ErrorKind::ParseError, "empty range for " + key);
    spec.bounds[key] = {lo, hi};
  }
  return spec;
}

RangeSpec RangeSpec::merged(const RangeSpec& overrides) const {
  RangeSpec out = *this;
  for (const auto& [k, v] : overrides.bounds) out.bounds[k] = v;
  return out;
}

std::pair<std::int64_t, std::int64_t> RangeSpec::at(const std::string& key) const {
  const auto it = bounds.find(key);
  if (it == bounds.end()) throw Error(ErrorKind::InvalidArgument, "range has no key " + key);
  return it->second;
}

std::string RangeSpec::render() const {
  std::string out;
  for (const auto& [k, v] : bounds) {
    if (!out.empty()) out += ',';
    out += k + '=' + std::to_string(v.first) + ".." + std::to_string(v.second);
  }
  return out;
}

// ---------------------------------------------------------------- helpers

namespace {

bool divides(std::int64_t d, std::int64_t v) { return mod(v, d) == 0; }

bool holds(const Magma& m, const char* identity) {
  return check_identity(m, lookup_identity(identity)).grade == Grade::strong;
}

json labels_of(const Magma& m, const std::vector<Index>& members) {
  json out = json::array();
  for (Index i : members) out.push_back(m.label(i));
  return out;
}

json assignment_json(const Magma& m, const IdentityVerdict& v) {
  if (!v.counterexample) return nullptr;
  const auto& a = *v.counterexample;
  return json{{"x", m.label(a[0])}, {"y", m.label(a[1])}, {"z", m.label(a[2])}};
}

/// Verdict of one identity with its failing assignment, for counterexamples.
json identity_json(const Magma& m, const char* identity) {
  const auto v = check_identity(m, lookup_identity(identity));
  json out{{"identity", identity}, {"holds", v.grade == Grade::strong}};
  if (v.counterexample) out["assignment"] = assignment_json(m, v);
  return out;
}

std::vector<std::int64_t> odd_from(std::pair<std::int64_t, std::int64_t> r, std::int64_t min) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max(r.first, min); n <= r.second; ++n) {
    if (n % 2 == 1) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> primes_in(std::pair<std::int64_t, std::int64_t> r, std::int64_t min = 2) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max(r.first, min); p <= r.second; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

/// Instances (n, t, u) over all residue pairs.
std::vector<Params> all_pairs(const RangeSpec& r) {
  std::vector<Params> out;
  const auto [lo, hi] = r.at("n");
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
    for (std::int64_t t = 0; t < n; ++t) {
      for (std::int64_t u = 0; u < n; ++u) out.push_back({{"n", n}, {"t", t}, {"u", u}});
    }
  }
  return out;
}

/// Instances (n, t) with u fixed by t + u ≡ 1 (mod n).
std::vector<Params> unit_sum_pairs(const RangeSpec& r, bool coprime_distinct) {
  std::vector<Params> out;
  const auto [lo, hi] = r.at("n");
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
    for (std::int64_t t = 0; t < n; ++t) {
      const std::int64_t u = mod(1 - t, n);
      if (coprime_distinct && (t == u || gcd(t, u) != 1)) continue;
      out.push_back({{"n", n}, {"t", t}, {"u", u}});
    }
  }
  return out;
}

/// Instances (n, m) over valid loop parameters, n odd.
std::vector<Params> loop_params(const RangeSpec& r, bool prime_only) {
  std::vector<Params> out;
  for (std::int64_t n : odd_from(r.at("n"), 5)) {
    if (prime_only && !is_prime(n)) continue;
    for (std::int64_t m : valid_loop_multipliers(n)) out.push_back({{"n", n}, {"m", m}});
  }
  return out;
}

MagmaPtr loop_magma(const Params& p) {
  return new_loop(get(p, "n"), get(p, "m")).component_magma(0);
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 2; t < n; ++t) {
    if (n % t == 0) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------- checkers

std::optional<json> check_idem(const Params& p) {
  const auto n = get(p, "n"), t = get(p, "t"), u = get(p, "u");
  const auto m = zn_groupoid(n, t, u).component_magma(0);
  const bool observed = holds(*m, "idempotent-law");
  const bool predicted = divides(n, t + u - 1);
  if (observed == predicted) return std::nullopt;
  return json{{"predicted", predicted}, {"observed", identity_json(*m, "idempotent-law")}};
}

std::optional<json> check_ptt(const Params& p) {
  const auto n = get(p, "n"), t = get(p, "t");
  const auto m = zn_groupoid(n, t, t).component_magma(0);
  if (holds(*m, "P-identity")) return std::nullopt;
  return identity_json(*m, "P-identity");
}

/// Z_n(0, t) and Z_n(t, 0) satisfy every listed identity iff t² ≡ t.
std::optional<json> check_zero_pair(const Params& p, const std::vector<const char*>& identities) {
  const auto n = get(p, "n"), t = get(p, "t");
  const bool predicted = divides(n, t * t - t);
  json bad = json::array();
  for (const auto& [a, b] : {std::pair{std::int64_t{0}, t}, std::pair{t, std::int64_t{0}}}) {
    const auto m = zn_groupoid(n, a, b).component_magma(0);
    bool all = true;
    json detail = json::array();
    for (const char* id : identities) {
      detail.push_back(identity_json(*m, id));
      all = all && detail.back()["holds"].get<bool>();
    }
    if (all != predicted) bad.push_back(json{{"pair", json::array({a, b})}, {"verdicts", detail}});
  }
  if (bad.empty()) return std::nullopt;
  return json{{"predicted", predicted}, {"mismatches", bad}};
}

std::optional<json> check_strong_family(const Params& p) {
  const auto n = get(p, "n"), t = get(p, "t"), u = get(p, "u");
  const auto m = zn_groupoid(n, t, u).component_magma(0);
  const bool predicted = divides(n, t * t - t);
  json bad = json::array();
  for (const char* id : {"left-alternative", "right-alternative", "P-identity", "Bol-as-printed", "Moufang"}) {
    json v = identity_json(*m, id);
    if (v["holds"].get<bool>() != predicted) bad.push_back(std::move(v));
  }
  if (bad.empty()) return std::nullopt;
  return json{{"predicted", predicted}, {"disagreeing", bad}};
}

std::optional<json> check_sgpd(const Params& p) {
  const auto s = zn_groupoid(get(p, "n"), get(p, "t"), get(p, "u"));
  const auto w = smarandache_witness(s);
  if (w.grade == WitnessGrade::smarandache) return std::nullopt;
  return json{{"witness", nullptr}, {"reason", "no proper subset is a semigroup"}};
}

std::optional<json> check_ideal_dual(const Params& p) {
  const auto n = get(p, "n"), t = get(p, "t"), u = get(p, "u");
  const auto g = zn_groupoid(n, t, u).component_magma(0);
  const auto dual = zn_groupoid(n, u, t).component_magma(0);
  const auto right = enumerate_ideals(*g, Side::right);
  const auto left = enumerate_ideals(*dual, Side::left);
  if (right == left) return std::nullopt;
  std::vector<std::vector<Index>> only_right;
  std::vector<std::vector<Index>> only_left;
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(only_right));
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(only_left));
  json out{{"right_not_left", json::array()}, {"left_not_right", json::array()}};
  for (const auto& s : only_right) out["right_not_left"].push_back(labels_of(*g, s));
  for (const auto& s : only_left) out["left_not_right"].push_back(labels_of(*dual, s));
  return out;
}

std::optional<json> check_simple_add(const Params& p) {
  const auto s = zn_group(get(p, "p"));
  if (is_simple(s, SimpleMode::substructure)) return std::nullopt;
  const auto e = enumerate_substructures(*s.component_magma(0));
  return json{{"substructure", labels_of(*s.component_magma(0), e.found.front().members)}};
}

std::optional<json> check_ideal_simple(const Params& p) {
  const auto q = get(p, "p");
  json bad = json::object();
  for (auto op : {ZnOp::add, ZnOp::mul}) {
    const auto s = zn_semigroup(q, op);
    const auto m = s.component_magma(0);
    for (const auto& ideal : enumerate_ideals(*m, Side::two_sided)) {
      if (proper_nontrivial(*m, ideal)) {
        bad[op == ZnOp::add ? "add" : "mul"] = labels_of(*m, ideal);
        break;
      }
    }
  }
  if (bad.empty()) return std::nullopt;
  return json{{"ideal", bad}};
}

/// Smallest two-sided ideal containing x.
std::vector<Index> principal_ideal(const Magma& m, Index x) {
  std::vector<char> in(m.order(), 0);
  std::vector<Index> todo{x};
  in[x] = 1;
  while (!todo.empty()) {
    const Index a = todo.back();
    todo.pop_back();
    for (Index s = 0; s < m.order(); ++s) {
      for (Index v : {m.op(s, a), m.op(a, s)}) {
        if (!in[v]) {
          in[v] = 1;
          todo.push_back(v);
        }
      }
    }
  }
  std::vector<Index> out;
  for (Index i = 0; i < m.order(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

/// Convention A counts every proper nontrivial ideal; convention B ignores
/// ideals that contain 0. A proper nontrivial ideal (avoiding 0) exists iff
/// some principal ideal is one, so principal ideals decide both.
std::optional<json> check_bisimple(const Params& p, bool ignore_zero) {
  const auto t = get(p, "t"), u = get(p, "u");
  const auto m = zn_groupoid(t + u, t, u).component_magma(0);
  for (Index x = 0; x < m->order(); ++x) {
    const auto ideal = principal_ideal(*m, x);
    if (!proper_nontrivial(*m, ideal)) continue;
    if (ignore_zero && ideal.front() == 0) continue;
    return json{{"n", t + u}, {"ideal", labels_of(*m, ideal)}};
  }
  return std::nullopt;
}

std::optional<json> check_loop_axioms(const Params& p) {
  const auto n = get(p, "n"), mm = get(p, "m");
  if (!valid_loop_params(n, mm)) {
    try {
      new_loop(n, mm);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BadLoopParams) return std::nullopt;
      throw;
    }
    return json{{"reason", "invalid parameters accepted by the constructor"}};
  }
  const auto m = loop_magma(p);
  const auto cls = classify(*m);
  json out = json::object();
  if (!cls.latin_square) out["latin_square"] = false;
  if (identity_of(*m) != std::optional<Index>{0}) out["identity"] = "e is not the identity";
  for (Index x = 1; x < m->order(); ++x) {
    if (m->op(x, x) != 0) {
      out["square"] = m->label(x);
      break;
    }
  }
  const bool commutative_expected = 2 * mm == n + 1;
  if (cls.commutative != commutative_expected) {
    out["commutative"] = cls.commutative;
    out["commutative_expected"] = commutative_expected;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<json> check_loop_order2(const Params& p) {
  const auto m = loop_magma(p);
  for (Index x = 1; x < m->order(); ++x) {
    const auto c = closure(*m, {x});
    if (c.size() != 2 || classify(*m->restrict_to(c)).label != ClassLabel::group) {
      return json{{"element", m->label(x)}, {"closure", labels_of(*m, c)}};
    }
  }
  return std::nullopt;
}

std::optional<json> check_cauchy(const Params& p) {
  const auto m = loop_magma(p);
  for (Index x = 1; x < m->order(); ++x) {
    const auto r = element_order(*m, x);
    if (!r || *r < 2 || m->order() % *r != 0) {
      return json{{"element", m->label(x)}, {"order", r ? json(*r) : json(nullptr)}};
    }
  }
  return std::nullopt;
}

/// Every subgroup of L_p(m) has prime-power order dividing p + 1.
std::optional<json> check_two_sylow(const Params& p) {
  const auto s = new_loop(get(p, "n"), get(p, "m"));
  const auto m = s.component_magma(0);
  EnumerationOptions opts;
  opts.class_filter = ClassLabel::group;
  for (const auto& sub : enumerate_substructures(*m, opts).found) {
    const auto k = sub.size();
    const auto f = factorize(static_cast<std::int64_t>(k));
    if (f.size() != 1 || m->order() % k != 0) {
      return json{{"subgroup", labels_of(*m, sub.members)}, {"order", k}};
    }
  }
  return std::nullopt;
}

std::optional<json> check_comm_loop(const Params& p) {
  const auto n = get(p, "n");
  const auto m = new_loop(n, (n + 1) / 2).component_magma(0);
  if (const auto bad = kernels::first_noncommuting(*m)) {
    return json{{"x", m->label((*bad)[0])}, {"y", m->label((*bad)[1])}};
  }
  return std::nullopt;
}

std::optional<json> check_fn_count(const Params& p) {
  const auto c = strict_noncommutative_count(get(p, "n"));
  if (c.brute == c.formula) return std::nullopt;
  return json{{"brute", c.brute}, {"formula", c.formula}, {"multipliers", c.multipliers}};
}

std::optional<json> check_normalizer(const Params& p) {
  const auto n = get(p, "n"), mm = get(p, "m"), t = get(p, "t");
  const auto m = loop_magma(p);
  const auto h = subloop_family_set(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(t), 1);
  if (closure(*m, h) != h) return json{{"reason", "H is not closed"}, {"H", labels_of(*m, h)}};
  const auto nz = normalizers(*m, h);
  const bool predicted = gcd(mm * mm - mm + 1, t) == gcd(2 * mm - 1, t);
  if (nz.equal == predicted) return std::nullopt;
  return json{{"predicted_equal", predicted},
              {"first", labels_of(*m, nz.first)},
              {"second", labels_of(*m, nz.second)}};
}

std::optional<json> check_moufang_center(const Params& p) {
  const auto m = loop_magma(p);
  const auto c = loop_centers(*m).moufang_center;
  if (c == std::vector<Index>{0} || c.size() == m->order()) return std::nullopt;
  return json{{"moufang_center", labels_of(*m, c)}};
}

std::optional<json> check_center_e(const Params& p) {
  const auto m = loop_magma(p);
  const auto c = loop_centers(*m).center;
  if (c == std::vector<Index>{0}) return std::nullopt;
  return json{{"center", labels_of(*m, c)}};
}

std::optional<json> check_subloop_family(const Params& p) {
  const auto m = loop_magma(p);
  json bad = json::array();
  for (const auto& h : loop_subloop_family(*m, static_cast<std::uint32_t>(get(p, "n")))) {
    if (!h.closed || !h.is_loop) {
      bad.push_back(json{{"t", h.t}, {"base", h.base}, {"set", labels_of(*m, h.members)},
                         {"closed", h.closed}, {"is_loop", h.is_loop}});
    }
  }
  if (bad.empty()) return std::nullopt;
  return json{{"failing", bad}};
}

std::optional<json> check_idem_gpd(const Params& p) {
  const auto m = zn_groupoid(get(p, "n"), get(p, "t"), get(p, "u")).component_magma(0);
  if (holds(*m, "idempotent-law")) return std::nullopt;
  return identity_json(*m, "idempotent-law");
}

std::optional<json> check_prime_half(const Params& p) {
  const auto q = get(p, "p");
  const auto h = (q + 1) / 2;
  const auto s = zn_groupoid(q, h, h);
  const auto m = s.component_magma(0);
  json out = json::object();
  if (!holds(*m, "idempotent-law")) out["idempotent"] = identity_json(*m, "idempotent-law");
  if (smarandache_witness(s).grade != WitnessGrade::smarandache) out["witness"] = nullptr;
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<json> check_no_cauchy(const Params& p) {
  const auto s = product({zn_semigroup(get(p, "p"), ZnOp::mul), zn_semigroup(get(p, "q"), ZnOp::mul)});
  const auto audit = cauchy_audit(s);
  if (audit.book.empty()) return std::nullopt;
  const auto m = s.magma();
  const auto& e = audit.book.front();
  return json{{"element", m->label(e.element)}, {"component_orders", e.component_orders},
              {"book_order", e.book_order}, {"structure_order", audit.structure_order}};
}

std::optional<json> check_lagrange_fail(const Params& p) {
  const auto s = product({zn_semigroup(get(p, "n"), ZnOp::mul, Flavor::plain), units_group(get(p, "p"))});
  EnumerationOptions opts;
  opts.max_seed = 4;
  const auto r = lagrange_audit(s, opts);
  if (r.grade != LagrangeGrade::lagrange) return std::nullopt;
  return json{{"grade", to_string(r.grade)}, {"structure_order", r.structure_order},
              {"checked", r.entries.size()}};
}

std::optional<json> check_cauchy_fail(const Params& p) {
  const auto s = product({units_group(get(p, "p")), zn_semigroup(get(p, "n"), ZnOp::mul)});
  const auto r = cauchy_audit(s);
  if (!r.book_failures.empty()) return std::nullopt;
  return json{{"structure_order", r.structure_order}, {"book_failures", 0}};
}

// ---------------------------------------------------------------- registry

RangeSpec range(const char* text) { return RangeSpec::parse(text); }

std::vector<TheoremClaim> build_registry() {
  std::vector<TheoremClaim> r;
  auto add = [&](TheoremClaim c) { r.push_back(std::move(c)); };

  add({"T-IDEM", "Z_n(t,u) satisfies the idempotent law iff n | t+u-1", "n >= 2, all (t,u) in Z_n^2",
       "asserted", range("n=2..30"), range("n=2..60"), {"idempotent-15-9-6"}, all_pairs, check_idem});
  add({"T-PTT", "Z_n(t,t) satisfies the P-identity (x*y)*x = x*(y*x)", "n >= 2, all t in Z_n", "asserted",
       range("n=2..30"), range("n=2..60"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         const auto [lo, hi] = s.at("n");
         for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
           for (std::int64_t t = 0; t < n; ++t) out.push_back({{"n", n}, {"t", t}});
         }
         return out;
       },
       check_ptt});
  auto zero_pairs = [](const RangeSpec& s) {
    std::vector<Params> out;
    const auto [lo, hi] = s.at("n");
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
      for (std::int64_t t = 1; t < n; ++t) out.push_back({{"n", n}, {"t", t}});
    }
    return out;
  };
  add({"T-P-ZERO", "Z_n(0,t) and Z_n(t,0) satisfy the P-identity iff t^2 = t (mod n)", "n >= 2, 0 < t < n",
       "asserted", range("n=2..30"), range("n=2..60"), {}, zero_pairs,
       [](const Params& p) { return check_zero_pair(p, {"P-identity"}); }});
  add({"T-ALT", "Z_n(0,t) and Z_n(t,0) are alternative iff t^2 = t (mod n)", "n >= 2, 0 < t < n", "asserted",
       range("n=2..30"), range("n=2..60"), {}, zero_pairs,
       [](const Params& p) { return check_zero_pair(p, {"left-alternative", "right-alternative"}); }});
  add({"T-STRONG-FAMILY",
       "under t+u = 1 (mod n) the left/right-alternative, P, Bol-as-printed and Moufang verdicts all equal "
       "[t^2 = t (mod n)]",
       "n >= 2, t in Z_n, u = 1 - t", "asserted, refuted-in-print", range("n=2..30"), range("n=2..60"), {},
       [](const RangeSpec& s) { return unit_sum_pairs(s, false); }, check_strong_family});
  add({"T-SGPD", "Z_n(t,u) with gcd(t,u) = 1, t != u, t+u = 1 (mod n), n > 5 has a proper semigroup",
       "n > 5", "asserted", range("n=6..30"), range("n=6..60"), {},
       [](const RangeSpec& s) {
         auto lo = s.merged(RangeSpec{{{"n", {std::max<std::int64_t>(s.at("n").first, 6), s.at("n").second}}}});
         return unit_sum_pairs(lo, true);
       },
       check_sgpd});
  add({"T-IDEAL-DUAL", "right ideals of Z_n(t,u) are exactly the left ideals of Z_n(u,t)",
       "n >= 2, all (t,u)", "asserted", range("n=2..12"), range("n=2..16"), {}, all_pairs, check_ideal_dual});
  add({"T-SIMPLE-ADD", "(Z_p,+) has no proper nontrivial substructure", "p prime", "asserted",
       range("p=2..50"), range("p=2..200"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto p : primes_in(s.at("p"))) out.push_back({{"p", p}});
         return out;
       },
       check_simple_add});
  add({"T-IDEAL-SIMPLE", "(Z_p,+) and (Z_p,x) have no proper nontrivial ideal", "p prime", "asserted",
       range("p=2..50"), range("p=2..200"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto p : primes_in(s.at("p"))) out.push_back({{"p", p}});
         return out;
       },
       check_ideal_simple});
  auto prime_pairs = [](const RangeSpec& s) {
    std::vector<Params> out;
    for (auto t : primes_in(s.at("t"))) {
      for (auto u : primes_in(s.at("u"))) out.push_back({{"t", t}, {"u", u}});
    }
    return out;
  };
  add({"T-BISIMPLE-GPD", "Z_n(t,u) with n = t+u and t, u prime has no proper nontrivial two-sided ideal",
       "t, u prime; every ideal counts", "asserted", range("t=2..13,u=2..13"), range("t=2..23,u=2..23"), {},
       prime_pairs, [](const Params& p) { return check_bisimple(p, false); }});
  add({"T-BISIMPLE-GPD-B",
       "Z_n(t,u) with n = t+u and t, u prime has no proper nontrivial two-sided ideal avoiding 0",
       "t, u prime; ideals containing 0 ignored", "asserted", range("t=2..13,u=2..13"),
       range("t=2..23,u=2..23"), {}, prime_pairs, [](const Params& p) { return check_bisimple(p, true); }});
  add({"T-LOOP-AXIOMS",
       "valid L_n(m) are loops with x*x = e, commutative iff m = (n+1)/2; invalid m are rejected",
       "n odd > 3, 1 < m < n", "asserted", range("n=5..51"), range("n=5..101"), {"invalid-loop-21-8"},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto n : odd_from(s.at("n"), 5)) {
           for (std::int64_t m = 2; m < n; ++m) out.push_back({{"n", n}, {"m", m}});
         }
         return out;
       },
       check_loop_axioms});
  add({"T-LOOP-ORDER2", "every non-identity x of L_n(m) generates a group {e, x} of order 2", "valid (n,m)",
       "asserted", range("n=5..51"), range("n=5..101"), {},
       [](const RangeSpec& s) { return loop_params(s, false); }, check_loop_order2});
  add({"T-CAUCHY", "every non-identity element of L_n(m) has order 2, which divides n+1", "valid (n,m)",
       "asserted", range("n=5..51"), range("n=5..101"), {},
       [](const RangeSpec& s) { return loop_params(s, false); }, check_cauchy});
  add({"T-2SYLOW", "every subgroup of L_p(m) has prime-power order dividing p+1", "p prime, valid m",
       "asserted", range("n=5..23"), range("n=5..31"), {},
       [](const RangeSpec& s) { return loop_params(s, true); }, check_two_sylow});
  add({"T-COMM-LOOP", "L_n((n+1)/2) is commutative", "n odd > 3", "asserted", range("n=5..51"),
       range("n=5..101"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto n : odd_from(s.at("n"), 5)) {
           if (valid_loop_params(n, (n + 1) / 2)) out.push_back({{"n", n}});
         }
         return out;
       },
       check_comm_loop});
  add({"T-FN-COUNT", "the number of strictly non-commutative L_n(m) equals F_n", "n odd > 3", "asserted",
       range("n=5..51"), range("n=5..101"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto n : odd_from(s.at("n"), 5)) out.push_back({{"n", n}});
         return out;
       },
       check_fn_count});
  add({"T-NORMALIZER",
       "for H = H_1(t) in L_n(m), the two normalizers agree iff gcd(m^2-m+1, t) = gcd(2m-1, t)",
       "n odd composite, valid m, 1 < t < n, t | n", "asserted", range("n=9..45"), range("n=9..63"),
       {"invalid-loop-21-8"},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto n : odd_from(s.at("n"), 5)) {
           for (auto m : valid_loop_multipliers(n)) {
             for (auto t : proper_divisors(n)) out.push_back({{"n", n}, {"m", m}, {"t", t}});
           }
         }
         return out;
       },
       check_normalizer});
  add({"T-MOUF-CENTER", "the Moufang center of L_p(m) is {e} or the whole loop", "p prime, valid m",
       "asserted", range("n=5..13"), range("n=5..31"), {},
       [](const RangeSpec& s) { return loop_params(s, true); }, check_moufang_center});
  add({"T-CENTER-E", "the center of L_p(m) is {e}", "p prime, valid m", "asserted", range("n=5..13"),
       range("n=5..31"), {}, [](const RangeSpec& s) { return loop_params(s, true); }, check_center_e});
  add({"T-SUBLOOP-FAMILY", "every H_i(t), t | n, 1 < t < n, 1 <= i <= t, is a subloop of L_n(m)",
       "n odd, valid m", "asserted", range("n=5..45"), range("n=5..63"), {"subloop-33-5-printed-set"},
       [](const RangeSpec& s) { return loop_params(s, false); }, check_subloop_family});
  add({"T-IDEM-GPD-N", "Z_n(t,u) with gcd(t,u) = 1 and t+u = 1 (mod n) is idempotent", "n >= 2",
       "asserted", range("n=2..30"), range("n=2..60"), {},
       [](const RangeSpec& s) {
         auto out = unit_sum_pairs(s, false);
         std::erase_if(out, [](const Params& p) { return gcd(get(p, "t"), get(p, "u")) != 1; });
         return out;
       },
       check_idem_gpd});
  add({"T-PRIME-HALF", "Z_p((p+1)/2, (p+1)/2) is idempotent and has a proper semigroup", "p odd prime",
       "asserted", range("p=3..31"), range("p=3..61"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto p : primes_in(s.at("p"), 3)) out.push_back({{"p", p}});
         return out;
       },
       check_prime_half});
  add({"T-NO-CAUCHY",
       "(Z_p,x) x (Z_q,x) for distinct odd primes has no element with all r_i > 1 and prod r_i | pq",
       "p < q odd primes", "asserted", range("p=11..19,q=11..19"), range("p=3..31,q=3..31"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto p : primes_in(s.at("p"), 3)) {
           for (auto q : primes_in(s.at("q"), 3)) {
             if (p < q) out.push_back({{"p", p}, {"q", q}});
           }
         }
         return out;
       },
       check_no_cauchy});
  add({"T-LAGRANGE-FAIL", "(Z_n,x) x U(p) has a substructure whose order does not divide the whole order",
       "demonstration instance", "asserted", range("n=16,p=7"), range("n=2..20,p=2..13"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         const auto [nlo, nhi] = s.at("n");
         for (auto n = std::max<std::int64_t>(nlo, 2); n <= nhi; ++n) {
           for (auto p : primes_in(s.at("p"))) out.push_back({{"n", n}, {"p", p}});
         }
         return out;
       },
       check_lagrange_fail});
  add({"T-CAUCHY-FAIL", "U(p) x (Z_n,x) has an element whose book order does not divide the whole order",
       "demonstration instance", "asserted", range("p=11,n=9"), range("p=2..31,n=2..30"), {},
       [](const RangeSpec& s) {
         std::vector<Params> out;
         for (auto p : primes_in(s.at("p"))) {
           const auto [nlo, nhi] = s.at("n");
           for (auto n = std::max<std::int64_t>(nlo, 2); n <= nhi; ++n) out.push_back({{"p", p}, {"n", n}});
         }
         return out;
       },
       check_cauchy_fail});
  return r;
}

}  // namespace

const std::vector<TheoremClaim>& registry() {
  static const std::vector<TheoremClaim> claims = build_registry();
  return claims;
}

const TheoremClaim& lookup_claim(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownClaim, "unknown claim " + id);
}

// ---------------------------------------------------------------- audit

AuditReport audit(const std::string& claim_id, const RangeSpec& range) {
  const auto& claim = lookup_claim(claim_id);
  for (const auto& [key, bounds] : range.bounds) {
    const auto it = claim.limits.bounds.find(key);
    if (it == claim.limits.bounds.end()) {
      throw Error(ErrorKind::InvalidArgument, claim.id + " has no parameter " + key);
    }
    if (bounds.first < it->second.first || bounds.second > it->second.second) {
      throw Error(ErrorKind::RangeTooLarge, claim.id + ": " + key + " must lie in " +
                                                std::to_string(it->second.first) + ".." +
                                                std::to_string(it->second.second));
    }
  }
  const RangeSpec effective = claim.defaults.merged(range);
  const auto start = std::chrono::steady_clock::now();

  auto instances = claim.instances(effective);
  std::sort(instances.begin(), instances.end());
  const auto count = static_cast<std::int64_t>(instances.size());
  std::vector<std::optional<json>> outcome(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      outcome[i] = claim.check(instances[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  AuditReport report;
  report.claim = claim.id;
  report.range = effective.render();
  report.errata_refs = claim.errata_refs;
  report.checked = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (outcome[i]) {
      report.refuted.push_back({instances[i], std::move(*outcome[i])});
    } else {
      ++report.confirmed;
    }
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<json> replay(const std::string& claim_id, const Params& params) {
  return lookup_claim(claim_id).check(params);
}

json to_json(const AuditReport& r) {
  json refuted = json::array();
  for (const auto& x : r.refuted) refuted.push_back({{"params", to_json(x.params)}, {"counterexample", x.counterexample}});
  return json{{"claim", r.claim},
              {"range", r.range},
              {"checked", r.checked},
              {"confirmed", r.confirmed},
              {"refuted", refuted},
              {"errata_refs", r.errata_refs},
              {"runtime_ms", r.runtime_ms}};
}

// ---------------------------------------------------------------- errata

namespace {

std::string point(std::uint32_t p) { return p == 0 ? "e" : std::to_string(p); }

/// The rule the printed loop entries follow instead: (m - 1)·a + m·b.
std::uint32_t swapped_loop_product(std::uint32_t n, std::int64_t m, std::uint32_t a, std::uint32_t b) {
  const auto r = mod((m - 1) * a + m * b, n);
  return r == 0 ? n : static_cast<std::uint32_t>(r);
}

Erratum loop_convention(std::uint32_t n, std::int64_t m, std::uint32_t a, std::uint32_t b,
                        std::uint32_t printed) {
  const auto computed = loop_product(n, m, a, b);
  return {"loop-convention-" + std::to_string(n) + "-" + std::to_string(m), "T-LOOP-AXIOMS",
          "L_" + std::to_string(n) + "(" + std::to_string(m) + "): " + std::to_string(a) + " * " +
              std::to_string(b) + " is printed with the rule (m-1)a + mb instead of mb - (m-1)a",
          point(printed), point(computed), [=] {
            return loop_product(n, m, a, b) == computed && computed != printed &&
                   swapped_loop_product(n, m, a, b) == printed;
          }};
}

Element mat3(const std::array<std::int64_t, 9>& v) {
  std::vector<Element> cells;
  for (auto x : v) cells.push_back(Element::mod(x, 12));
  return Element::matrix(3, 3, std::move(cells));
}

const std::array<std::int64_t, 9> kMatA{3, 1, 7, 1, 8, 0, 2, 0, 5};
const std::array<std::int64_t, 9> kMatB{2, 0, 0, 7, 5, 0, 1, 3, 8};
const std::array<std::int64_t, 9> kMatPrinted{9, 0, 0, 1, 11, 0, 7, 0, 8};

std::int64_t matrix_cell(std::size_t cell) {
  const auto s = matrix_structure(3, 3, zn_groupoid(12, 7, 0), MatrixMode::entrywise);
  return s.apply(mat3(kMatA), mat3(kMatB)).as<MatrixElement>().cells[cell].as<ModInterval>().value;
}

Element five_loop_product() {
  const auto s = product({new_loop(9, 8, Flavor::plain), new_loop(11, 7), new_loop(11, 3, Flavor::plain),
                          new_loop(13, 9), new_loop(15, 8)});
  auto tuple = [](std::array<std::uint32_t, 5> v, std::array<std::uint32_t, 5> n) {
    std::vector<Element> parts;
    for (std::size_t i = 0; i < 5; ++i) parts.push_back(Element::loop(v[i], n[i]));
    return Element::tuple(std::move(parts));
  };
  const std::array<std::uint32_t, 5> n{9, 11, 11, 13, 15};
  return s.apply(tuple({6, 10, 7, 8, 12}, n), tuple({2, 7, 3, 5, 10}, n));
}

std::uint32_t five_loop_component(std::size_t i) {
  return five_loop_product().as<TupleElement>().parts[i].as<LoopPoint>().point;
}

std::vector<Erratum> build_errata() {
  std::vector<Erratum> out;
  out.push_back({"idempotent-15-9-6", "T-IDEM",
                 "Z_15(9,6) is presented as idempotent, but 9 + 6 - 1 = 14 is not divisible by 15", "[0,1]*[0,1] = [0,1]",
                 "[0,1]*[0,1] = [0,0]", [] {
                   const auto s = zn_groupoid(15, 9, 6);
                   const bool square = s.apply(Element::mod(1, 15), Element::mod(1, 15)) == Element::mod(0, 15);
                   return square && !holds(*s.component_magma(0), "idempotent-law");
                 }});
  out.push_back(loop_convention(9, 8, 6, 4, 2));
  out.push_back(loop_convention(15, 8, 9, 10, 8));
  out.push_back({"loop-5-2-cell-4-4", "T-LOOP-AXIOMS",
                 "the printed L_5(2) table has [0,3] at row [0,4], column [0,4]; every x*x is e", "[0,3]", "[0,e]",
                 [] {
                   const auto m = new_loop(5, 2).component_magma(0);
                   return m->op(4, 4) == 0;
                 }});
  out.push_back({"five-loop-component-2", "",
                 "in the 5-loop product the second component is printed [0,0]; residue 0 is the point 11 of L_11(7)",
                 "[0,0]", "[0,11]", [] { return five_loop_component(1) == 11; }});
  out.push_back({"five-loop-component-4", "",
                 "in the 5-loop product the fourth component of L_13(9) is 9*5 - 8*8 = -19 = 7 (mod 13)",
                 "[0,3]", "[0,7]", [] { return five_loop_component(3) == 7; }});
  for (std::size_t cell = 0; cell < 9; ++cell) {
    const auto value = mod(7 * kMatA[cell], 12);
    if (value == kMatPrinted[cell]) continue;
    const auto r = cell / 3 + 1, c = cell % 3 + 1;
    out.push_back({"matrix-z12-7-0-cell-" + std::to_string(r) + "-" + std::to_string(c), "",
                   "entrywise product over Z_12(7,0): cell (" + std::to_string(r) + "," + std::to_string(c) +
                       ") should be 7a + 0b mod 12",
                   "[0," + std::to_string(kMatPrinted[cell]) + "]", "[0," + std::to_string(value) + "]",
                   [cell, value] { return matrix_cell(cell) == value && value != kMatPrinted[cell]; }});
  }
  out.push_back({"four-groupoid-component-3", "",
                 "Z_19(4,4): [0,1]*[0,8] = 4 + 32 = 36 = 17 (mod 19)", "[0,12]", "[0,17]", [] {
                   return zn_groupoid(19, 4, 4).apply(Element::mod(1, 19), Element::mod(8, 19)) ==
                          Element::mod(17, 19);
                 }});
  out.push_back({"invalid-loop-21-8", "T-NORMALIZER",
                 "L_21(8) is used as a loop, but gcd(m-1, n) = gcd(7, 21) = 7, so its table is not latin",
                 "a loop", "not a loop", [] {
                   bool rejected = false;
                   try {
                     new_loop(21, 8);
                   } catch (const Error& e) {
                     rejected = e.kind() == ErrorKind::BadLoopParams;
                   }
                   const auto m = new_loop(21, 8, Flavor::interval, LoopCheck::formula_only).component_magma(0);
                   return rejected && !classify(*m).latin_square;
                 }});
  out.push_back({"subloop-33-5-printed-set", "T-SUBLOOP-FAMILY",
                 "H_1(11) in L_33(5) is printed as {e, 11, 12, 23}; the pattern {e, i, i+t, ...} gives {e, 1, 12, 23}",
                 "{[0,e], [0,11], [0,12], [0,23]}", "{[0,e], [0,1], [0,12], [0,23]}", [] {
                   const auto m = new_loop(33, 5).component_magma(0);
                   const auto family = subloop_family_set(33, 11, 1);
                   const std::vector<Index> printed{0, 11, 12, 23};
                   return family == std::vector<Index>{0, 1, 12, 23} && closure(*m, family) == family &&
                          closure(*m, printed) != printed;
                 }});
  out.push_back({"subgroup-u5-printed-set", "",
                 "{1, 3} is presented as a subgroup of U(5), but 3*3 = 4", "{[0,1], [0,3]}",
                 "{[0,1], [0,2], [0,3], [0,4]}", [] {
                   const auto m = units_group(5).component_magma(0);
                   const auto one = m->index_of(Element::mod(1, 5));
                   const auto three = m->index_of(Element::mod(3, 5));
                   return closure(*m, {one, three}).size() == 4;
                 }});
  out.push_back({"isotope-5-3-row-1", "",
                 "the printed principal isotope of L_5(3) with identity 4 repeats 3 in row 1", "3 2 5 3 1 4",
                 "a latin row", [] {
                   // Printed table, rows and columns ordered e, 1..5.
                   const std::vector<Index> printed{4, 5, 3, 1, 0, 2, 3, 2, 5, 3, 1, 4, 5, 3, 1, 4, 2, 0,
                                                    2, 4, 0, 5, 3, 1, 0, 1, 2, 3, 4, 5, 1, 0, 4, 2, 5, 3};
                   const auto m = new_loop(5, 3).component_magma(0);
                   const auto best = isotope_search(*m, printed);
                   if (best.empty()) return false;
                   for (const auto& match : best) {
                     for (const auto& [row, col] : match.mismatches) {
                       if (row != 1) return false;
                     }
                     if (match.mismatches.empty()) return false;
                   }
                   return true;
                 }});
  return out;
}

}  // namespace

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> list = build_errata();
  return list;
}

const Erratum& lookup_erratum(const std::string& id) {
  for (const auto& e : errata()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorKind::UndefinedName, "unknown erratum " + id);
}

// ---------------------------------------------------------------- counting

std::uint64_t fn_formula(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::BadN, "F_n needs n >= 2");
  std::uint64_t f = 1;
  for (const auto& [p, a] : factorize(n)) {
    if (p <= 3) return 0;
    f *= static_cast<std::uint64_t>(p - 3);
    for (int i = 1; i < a; ++i) f *= static_cast<std::uint64_t>(p);
  }
  return f;
}

StrictCount strict_noncommutative_count(std::int64_t n) {
  if (n <= 3 || n % 2 == 0) throw Error(ErrorKind::BadN, "n must be odd and greater than 3, got " + std::to_string(n));
  StrictCount out;
  out.formula = fn_formula(n);
  const auto nn = static_cast<std::uint32_t>(n);
  for (auto m : valid_loop_multipliers(n)) {
    bool strict = true;
    for (std::uint32_t x = 1; x <= nn && strict; ++x) {
      for (std::uint32_t y = x + 1; y <= nn; ++y) {
        if (loop_product(nn, m, x, y) == loop_product(nn, m, y, x)) {
          strict = false;
          break;
        }
      }
    }
    if (strict) out.multipliers.push_back(m);
  }
  out.brute = out.multipliers.size();
  return out;
}

// ---------------------------------------------------------------- homomorphisms

HomomorphismResult check_homomorphism(const Structure& src, const Structure& dst,
                                      const std::vector<std::optional<std::size_t>>& assignment,
                                      const std::vector<std::vector<Index>>& maps) {
  if (assignment.size() != src.arity() || maps.size() != src.arity()) {
    throw Error(ErrorKind::ArityMismatch, "need one assignment and one map per source component");
  }
  for (std::size_t i = 0; i < src.arity(); ++i) {
    if (!assignment[i]) throw Error(ErrorKind::ArityMismatch, "source component " + std::to_string(i) + " is unmapped");
    if (*assignment[i] >= dst.arity()) {
      throw Error(ErrorKind::ArityMismatch, "destination component " + std::to_string(*assignment[i]) + " does not exist");
    }
  }
  for (std::size_t i = 0; i < src.arity(); ++i) {
    const auto a = src.component_magma(i);
    const auto b = dst.component_magma(*assignment[i]);
    const auto& eta = maps[i];
    if (eta.size() != a->order()) {
      throw Error(ErrorKind::ArityMismatch, "map " + std::to_string(i) + " is not total on its component");
    }
    for (Index v : eta) {
      if (v >= b->order()) throw Error(ErrorKind::InvalidArgument, "map " + std::to_string(i) + " leaves its target");
    }
    for (Index x = 0; x < a->order(); ++x) {
      for (Index y = 0; y < a->order(); ++y) {
        if (eta[a->op(x, y)] != b->op(eta[x], eta[y])) return {false, HomomorphismCounterexample{i, x, y}};
      }
    }
  }
  return {};
}

}  // namespace ialg
