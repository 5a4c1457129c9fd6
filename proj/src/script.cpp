#include "ialg/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "ialg/audit.hpp"
#include "ialg/error.hpp"
#include "ialg/identities.hpp"
#include "ialg/loops.hpp"
#include "ialg/report.hpp"
#include "ialg/special_elements.hpp"
#include "ialg/substructures.hpp"

namespace ialg::script {

using nlohmann::json;

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

[[noreturn]] void fail(ErrorKind kind, std::size_t line, std::size_t column, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

const std::vector<std::string> kSpecialKinds{"zero-divisors", "units", "idempotents", "nilpotents", "cauchy"};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line, std::set<std::string>& defined)
      : toks_(std::move(tokens)), line_(line), defined_(defined) {}

  Statement parse() {
    Statement st;
    st.line = line_;
    if (toks_.size() >= 2 && toks_[1].text == "=") {
      st.body = parse_let();
    } else {
      st.body = parse_command();
    }
    return st;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::set<std::string>& defined_;

  bool done() const { return pos_ >= toks_.size(); }

  std::size_t column() const {
    if (!done()) return toks_[pos_].column;
    if (toks_.empty()) return 1;
    return toks_.back().column + toks_.back().text.size();
  }

  [[noreturn]] void error(const std::string& what) const { fail(ErrorKind::ParseError, line_, column(), what); }

  const Token& next(const char* what) {
    if (done()) error(std::string("expected ") + what);
    return toks_[pos_++];
  }

  std::string word(const std::vector<std::string>& choices) {
    std::string want;
    for (const auto& c : choices) want += (want.empty() ? "" : "|") + c;
    const Token& t = next(want.c_str());
    if (std::find(choices.begin(), choices.end(), t.text) == choices.end()) {
      --pos_;
      error("expected " + want + ", got '" + t.text + "'");
    }
    return t.text;
  }

  std::int64_t integer(const char* what) {
    const Token& t = next(what);
    const auto r = parse_rational(t.text);
    if (!r || !r->is_integer()) {
      --pos_;
      error(std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return r->num;
  }

  Rational rational(const char* what) {
    const Token& t = next(what);
    const auto r = parse_rational(t.text);
    if (!r) {
      --pos_;
      error(std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return *r;
  }

  std::string name_use() {
    const Token& t = next("a structure name");
    if (!is_identifier(t.text)) {
      --pos_;
      error("expected a structure name, got '" + t.text + "'");
    }
    if (!defined_.count(t.text)) fail(ErrorKind::UndefinedName, line_, t.column, "undefined name '" + t.text + "'");
    return t.text;
  }

  Flavor flavor() {
    if (done()) return Flavor::interval;
    return word({"interval", "plain"}) == "plain" ? Flavor::plain : Flavor::interval;
  }

  void end() {
    if (!done()) error("unexpected '" + toks_[pos_].text + "'");
  }

  Let parse_let() {
    const Token& name = toks_[0];
    if (!is_identifier(name.text)) fail(ErrorKind::ParseError, line_, name.column, "bad name '" + name.text + "'");
    pos_ = 2;
    const std::string kind = word({"semigroup", "groupoid", "loop", "group", "sym", "matrix", "union"});
    Let let{name.text, {}};
    if (kind == "semigroup") {
      word({"zmod"});
      SemigroupExpr e;
      e.n = integer("modulus");
      e.op = word({"add", "mul"}) == "add" ? ZnOp::add : ZnOp::mul;
      e.flavor = flavor();
      let.expr = e;
    } else if (kind == "groupoid") {
      word({"zmod"});
      GroupoidExpr e;
      e.n = integer("modulus");
      e.t = rational("t");
      e.u = rational("u");
      e.flavor = flavor();
      let.expr = e;
    } else if (kind == "loop") {
      LoopExpr e;
      e.n = integer("n");
      e.m = integer("m");
      e.flavor = flavor();
      let.expr = e;
    } else if (kind == "group") {
      GroupExpr e;
      e.units = word({"zmod", "units"}) == "units";
      e.n = integer("modulus");
      e.flavor = flavor();
      let.expr = e;
    } else if (kind == "sym") {
      SymExpr e;
      const auto k = integer("degree");
      if (k < 1) error("degree must be positive");
      e.k = static_cast<unsigned>(std::min<std::int64_t>(k, 1000));
      e.group = word({"group", "monoid"}) == "group";
      e.flavor = flavor();
      let.expr = e;
    } else if (kind == "matrix") {
      MatrixExpr e;
      const auto r = integer("rows");
      const auto c = integer("columns");
      if (r < 1 || c < 1) error("matrix dimensions must be positive");
      e.rows = static_cast<std::size_t>(r);
      e.cols = static_cast<std::size_t>(c);
      word({"of"});
      e.base = name_use();
      e.mode = word({"entrywise", "mul"}) == "mul" ? MatrixMode::mul : MatrixMode::entrywise;
      let.expr = e;
    } else {
      UnionExpr e;
      e.names.push_back(name_use());
      while (!done()) e.names.push_back(name_use());
      let.expr = e;
    }
    end();
    defined_.insert(let.name);
    return let;
  }

  /// Parses "--key value" options among `allowed`, returned in allowed order.
  std::vector<std::pair<std::string, std::string>> options(const std::vector<std::string>& allowed) {
    std::map<std::string, std::string> seen;
    while (!done()) {
      const Token& t = next("an option");
      if (t.text.rfind("--", 0) != 0) {
        --pos_;
        error("unexpected '" + t.text + "'");
      }
      const std::string key = t.text.substr(2);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        --pos_;
        error("unknown option '" + t.text + "'");
      }
      if (seen.count(key)) {
        --pos_;
        error("repeated option '" + t.text + "'");
      }
      seen[key] = next("an option value").text;
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& k : allowed) {
      if (seen.count(k)) out.emplace_back(k, seen[k]);
    }
    return out;
  }

  void check_option(const Command& c, const std::string& key, const std::vector<std::string>& choices) {
    for (std::size_t i = 0; i < c.options.size(); ++i) {
      if (c.options[i].first != key) continue;
      if (std::find(choices.begin(), choices.end(), c.options[i].second) == choices.end()) {
        fail(ErrorKind::ParseError, line_, toks_.back().column, "bad value '" + c.options[i].second + "' for --" + key);
      }
    }
  }

  void check_integer_option(const Command& c, const std::string& key) {
    for (const auto& [k, v] : c.options) {
      if (k != key) continue;
      const auto r = parse_rational(v);
      if (!r || !r->is_integer() || r->num < 0) {
        fail(ErrorKind::ParseError, line_, toks_.back().column, "--" + key + " needs a nonnegative integer");
      }
    }
  }

  static void default_option(Command& c, const std::string& key, const std::string& value, std::size_t at) {
    for (const auto& o : c.options) {
      if (o.first == key) return;
    }
    c.options.insert(c.options.begin() + static_cast<std::ptrdiff_t>(std::min(at, c.options.size())), {key, value});
  }

  Command parse_command() {
    Command c;
    c.verb = word({"table", "classify", "check", "find", "subs", "ideals", "smarandache", "loopinfo", "audit",
                   "export"});
    const std::string& v = c.verb;
    if (v == "table") {
      c.args = {name_use()};
      c.options = options({"format"});
      check_option(c, "format", {"csv", "json"});
      default_option(c, "format", "csv", 0);
    } else if (v == "classify" || v == "smarandache") {
      c.args = {name_use()};
    } else if (v == "check") {
      c.args = {name_use()};
      const Token& id = next("an identity name");
      try {
        c.args.push_back(lookup_identity(id.text).name);
      } catch (const Error&) {
        fail(ErrorKind::UndefinedName, line_, id.column, "unknown identity '" + id.text + "'");
      }
    } else if (v == "find") {
      c.args = {name_use(), word(kSpecialKinds)};
      c.options = options({"quasi"});
      check_integer_option(c, "quasi");
    } else if (v == "subs") {
      c.args = {name_use()};
      c.options = options({"class", "max"});
      check_option(c, "class", {"groupoid", "semigroup", "monoid", "group", "quasigroup", "loop"});
      check_integer_option(c, "max");
    } else if (v == "ideals") {
      c.args = {name_use()};
      c.options = options({"side"});
      check_option(c, "side", {"left", "right", "two"});
      default_option(c, "side", "two", 0);
    } else if (v == "loopinfo") {
      c.args = {name_use()};
      const auto what = word({"centers", "subloops", "normalizers", "isotope"});
      c.args.push_back(what);
      if (what == "normalizers") {
        c.args.push_back(next("a subloop H_i(t) as T or T:I").text);
      } else if (what == "isotope") {
        c.args.push_back(next("element a").text);
        c.args.push_back(next("element b").text);
      }
    } else if (v == "audit") {
      c.args = {next("a claim id").text};
      c.options = options({"range"});
      for (const auto& [k, val] : c.options) {
        try {
          RangeSpec::parse(val);
        } catch (const Error& e) {
          fail(ErrorKind::ParseError, line_, toks_.back().column, e.what());
        }
      }
    } else {
      c.args = {name_use(), next("a path").text};
    }
    end();
    return c;
  }
};

}  // namespace

std::string join_inline(const std::string& text) {
  std::string out = text;
  std::replace(out.begin(), out.end(), ';', '\n');
  return out;
}

Script parse_script(const std::string& text) {
  Script script;
  std::set<std::string> defined;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    script.statements.push_back(LineParser(std::move(tokens), number, defined).parse());
  }
  return script;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string flavor_word(Flavor f) { return f == Flavor::plain ? "plain" : "interval"; }

struct ExprRenderer {
  std::string operator()(const SemigroupExpr& e) const {
    return "semigroup zmod " + std::to_string(e.n) + (e.op == ZnOp::add ? " add " : " mul ") + flavor_word(e.flavor);
  }
  std::string operator()(const GroupoidExpr& e) const {
    return "groupoid zmod " + std::to_string(e.n) + " " + to_string(e.t) + " " + to_string(e.u) + " " +
           flavor_word(e.flavor);
  }
  std::string operator()(const LoopExpr& e) const {
    return "loop " + std::to_string(e.n) + " " + std::to_string(e.m) + " " + flavor_word(e.flavor);
  }
  std::string operator()(const GroupExpr& e) const {
    return std::string("group ") + (e.units ? "units " : "zmod ") + std::to_string(e.n) + " " + flavor_word(e.flavor);
  }
  std::string operator()(const SymExpr& e) const {
    return "sym " + std::to_string(e.k) + (e.group ? " group " : " monoid ") + flavor_word(e.flavor);
  }
  std::string operator()(const MatrixExpr& e) const {
    return "matrix " + std::to_string(e.rows) + " " + std::to_string(e.cols) + " of " + e.base +
           (e.mode == MatrixMode::mul ? " mul" : " entrywise");
  }
  std::string operator()(const UnionExpr& e) const {
    std::string out = "union";
    for (const auto& n : e.names) out += " " + n;
    return out;
  }
};

}  // namespace

std::string render(const Statement& statement) {
  if (const auto* let = std::get_if<Let>(&statement.body)) {
    return let->name + " = " + std::visit(ExprRenderer{}, let->expr);
  }
  const auto& c = std::get<Command>(statement.body);
  std::string out = c.verb;
  for (const auto& a : c.args) out += " " + a;
  for (const auto& [k, v] : c.options) out += " --" + k + " " + v;
  return out;
}

std::string render(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += render(s) + "\n";
  return out;
}

// ---------------------------------------------------------------- execution

namespace {

struct Bound {
  Structure structure;
  std::string spec;
};

class Runner {
 public:
  explicit Runner(const RunOptions& options) : options_(options) {}

  void define(const Let& let) {
    Structure s = std::visit([&](const auto& e) { return build(let.name, e); }, let.expr);
    if (s.finite()) {
      const auto order = order_of(s);
      if (order > options_.max_order) {
        throw Error(ErrorKind::OrderTooLarge, let.name + " has order " + std::to_string(order) + ", above the cap " +
                                                  std::to_string(options_.max_order));
      }
    }
    names_.insert_or_assign(let.name, Bound{std::move(s), std::visit(ExprRenderer{}, let.expr)});
  }

  json run(const Command& c) {
    const auto& v = c.verb;
    if (v == "audit") return run_audit(c);
    const Bound& b = lookup(c.args[0]);
    const Structure& s = b.structure;
    json out{{"name", c.args[0]}, {"spec", b.spec}};
    if (v == "table") {
      const auto format = option(c, "format").value_or("csv");
      if (format == "csv") {
        out["csv"] = table_csv(*finite(s).magma());
      } else {
        out.update(table_json(*finite(s).magma()));
      }
    } else if (v == "classify") {
      finite(s);
      out["order"] = order_of(s);
      out["label"] = structure_label(s);
      out["class"] = to_json(classify(s));
      json parts = json::array();
      for (std::size_t i = 0; i < s.arity(); ++i) parts.push_back(to_json(classify(*s.component_magma(i))));
      out["components"] = std::move(parts);
    } else if (v == "check") {
      const auto& id = lookup_identity(c.args[1]);
      out["identity"] = id.name;
      out["law"] = id.render();
      out.update(to_json(finite(s), s_check_identity(s, id)));
    } else if (v == "find") {
      const auto kind = special_kind(c.args[1]);
      const auto quasi = option(c, "quasi");
      const auto report = quasi ? find_quasi_special(finite(s), kind, static_cast<std::uint32_t>(std::stoul(*quasi)))
                                : find_special(finite(s), kind);
      out.update(to_json(s, report));
    } else if (v == "subs") {
      EnumerationOptions opts;
      if (const auto cls = option(c, "class")) opts.class_filter = class_label(*cls);
      if (const auto max = option(c, "max")) opts.max_size = std::stoull(*max);
      out.update(to_json(s, lagrange_audit(finite(s), opts)));
    } else if (v == "ideals") {
      const auto side_word = option(c, "side").value_or("two");
      const Side side = side_word == "left" ? Side::left : side_word == "right" ? Side::right : Side::two_sided;
      json list = json::array();
      for (const auto& parts : enumerate_ideals(finite(s), side)) {
        json item = json::array();
        for (std::size_t i = 0; i < parts.size(); ++i) {
          json members = json::array();
          for (Index x : parts[i]) members.push_back(s.component_magma(i)->label(x));
          item.push_back(std::move(members));
        }
        list.push_back(std::move(item));
      }
      out["side"] = side_word;
      out["ideals"] = std::move(list);
    } else if (v == "smarandache") {
      out.update(to_json(s, smarandache_witness(finite(s))));
    } else if (v == "loopinfo") {
      run_loopinfo(c, s, out);
    } else if (v == "export") {
      const std::string path = c.args[1];
      const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
      export_table(finite(s), csv ? TableFormat::csv : TableFormat::json, path);
      out["path"] = path;
      out["format"] = csv ? "csv" : "json";
    }
    return out;
  }

 private:
  RunOptions options_;
  std::map<std::string, Bound> names_;

  const Bound& lookup(const std::string& name) const {
    const auto it = names_.find(name);
    if (it == names_.end()) throw Error(ErrorKind::UndefinedName, "undefined name '" + name + "'");
    return it->second;
  }

  static const Structure& finite(const Structure& s) {
    if (!s.finite()) throw Error(ErrorKind::InfiniteCarrier, s.name() + " is infinite");
    return s;
  }

  static std::optional<std::string> option(const Command& c, const std::string& key) {
    for (const auto& [k, v] : c.options) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  static SpecialKind special_kind(const std::string& w) {
    if (w == "zero-divisors") return SpecialKind::zero_divisor;
    if (w == "units") return SpecialKind::unit;
    if (w == "idempotents") return SpecialKind::idempotent;
    if (w == "nilpotents") return SpecialKind::nilpotent;
    return SpecialKind::cauchy;
  }

  static ClassLabel class_label(const std::string& w) {
    for (auto c : {ClassLabel::groupoid, ClassLabel::semigroup, ClassLabel::monoid, ClassLabel::group,
                   ClassLabel::quasigroup, ClassLabel::loop}) {
      if (to_string(c) == w) return c;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown class " + w);
  }

  json run_audit(const Command& c) {
    const auto range = option(c, "range");
    auto report = to_json(audit(c.args[0], range ? RangeSpec::parse(*range) : RangeSpec{}));
    report.erase("runtime_ms");  // keeps output byte-identical across runs
    return report;
  }

  /// A loop point from its label: "e" or "0" is the identity.
  static Index loop_point(const std::string& text, Index order) {
    if (text == "e") return 0;
    const auto r = parse_rational(text);
    if (!r || !r->is_integer() || r->num < 0 || r->num >= order) {
      throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not a point of the loop");
    }
    return static_cast<Index>(r->num);
  }

  static void run_loopinfo(const Command& c, const Structure& s, json& out) {
    if (s.is_product() || !s.components()[0].carrier.get_if<Carrier::LoopSet>()) {
      throw Error(ErrorKind::InvalidArgument, "loopinfo needs a single L_n(m) loop");
    }
    const auto m = s.component_magma(0);
    const auto n = m->order() - 1;
    auto labels = [&](const std::vector<Index>& xs) {
      json a = json::array();
      for (Index x : xs) a.push_back(m->label(x));
      return a;
    };
    const auto& what = c.args[1];
    out["info"] = what;
    if (what == "centers") {
      const auto z = loop_centers(*m);
      out["commutant"] = labels(z.commutant);
      out["left_nucleus"] = labels(z.left_nucleus);
      out["middle_nucleus"] = labels(z.middle_nucleus);
      out["right_nucleus"] = labels(z.right_nucleus);
      out["nucleus"] = labels(z.nucleus);
      out["center"] = labels(z.center);
      out["moufang_center"] = labels(z.moufang_center);
    } else if (what == "subloops") {
      json list = json::array();
      for (const auto& h : loop_subloop_family(*m, n)) {
        list.push_back(json{{"t", h.t}, {"base", h.base}, {"members", labels(h.members)},
                            {"closed", h.closed}, {"is_loop", h.is_loop}});
      }
      out["family"] = std::move(list);
    } else if (what == "normalizers") {
      const auto& spec = c.args[2];
      const auto colon = spec.find(':');
      const auto t = parse_rational(spec.substr(0, colon));
      const auto base = colon == std::string::npos ? std::optional<Rational>(Rational{1, 1})
                                                   : parse_rational(spec.substr(colon + 1));
      if (!t || !base || !t->is_integer() || !base->is_integer() || t->num <= 1 || t->num >= n ||
          n % t->num != 0 || base->num < 1 || base->num > t->num) {
        throw Error(ErrorKind::InvalidArgument, "H must be T or T:I with T a proper divisor of n and 1 <= I <= T");
      }
      const auto h = subloop_family_set(n, static_cast<std::uint32_t>(t->num), static_cast<std::uint32_t>(base->num));
      const auto nz = normalizers(*m, h);
      out["H"] = labels(h);
      out["first"] = labels(nz.first);
      out["second"] = labels(nz.second);
      out["equal"] = nz.equal;
    } else {
      const Index a = loop_point(c.args[2], m->order());
      const Index b = loop_point(c.args[3], m->order());
      const auto iso = principal_isotope(*m, a, b);
      out["a"] = m->label(a);
      out["b"] = m->label(b);
      out["identity"] = m->label(m->op(a, b));
      out.update(table_json(*iso));
    }
  }

  Structure build(const std::string&, const SemigroupExpr& e) { return zn_semigroup(e.n, e.op, e.flavor); }
  Structure build(const std::string&, const GroupoidExpr& e) { return zn_groupoid(e.n, e.t, e.u, e.flavor); }
  Structure build(const std::string&, const LoopExpr& e) { return new_loop(e.n, e.m, e.flavor); }
  Structure build(const std::string&, const GroupExpr& e) {
    return e.units ? units_group(e.n, e.flavor) : zn_group(e.n, e.flavor);
  }
  Structure build(const std::string&, const SymExpr& e) { return sym_structure(e.k, e.group, e.flavor); }
  Structure build(const std::string&, const MatrixExpr& e) {
    return matrix_structure(e.rows, e.cols, lookup(e.base).structure, e.mode);
  }
  Structure build(const std::string& name, const UnionExpr& e) {
    if (e.names.size() == 1) return lookup(e.names[0]).structure;
    std::vector<Component> parts;
    for (const auto& n : e.names) {
      for (const auto& c : lookup(n).structure.components()) parts.push_back(c);
    }
    return Structure(name, std::move(parts));
  }
};

}  // namespace

RunResult execute(const Script& script, const RunOptions& options) {
  RunResult result;
  Runner runner(options);
  for (const auto& st : script.statements) {
    try {
      if (const auto* let = std::get_if<Let>(&st.body)) {
        runner.define(*let);
      } else {
        const auto& c = std::get<Command>(st.body);
        json out{{"line", st.line}, {"command", c.verb}};
        out.update(runner.run(c));
        result.outputs.push_back(std::move(out));
      }
    } catch (const Error& e) {
      const std::string kind(to_string(e.kind()));
      result.diagnostics.push_back({st.line, kind, e.what()});
      result.outputs.push_back(json{{"line", st.line}, {"error", kind}, {"message", e.what()}});
      result.exit_status = 1;
    }
  }
  return result;
}

}  // namespace ialg::script
