#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ialg/constructors.hpp"
#include "ialg/numeric.hpp"

namespace ialg::script {

struct SemigroupExpr {
  std::int64_t n = 0;
  ZnOp op = ZnOp::add;
  Flavor flavor = Flavor::interval;
  friend bool operator==(const SemigroupExpr&, const SemigroupExpr&) = default;
};

struct GroupoidExpr {
  std::int64_t n = 0;
  Rational t;
  Rational u;
  Flavor flavor = Flavor::interval;
  friend bool operator==(const GroupoidExpr&, const GroupoidExpr&) = default;
};

struct LoopExpr {
  std::int64_t n = 0;
  std::int64_t m = 0;
  Flavor flavor = Flavor::interval;
  friend bool operator==(const LoopExpr&, const LoopExpr&) = default;
};

struct GroupExpr {
  bool units = false;  // (Z_n, +) when false, U(n) when true
  std::int64_t n = 0;
  Flavor flavor = Flavor::interval;
  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

struct SymExpr {
  unsigned k = 0;
  bool group = true;  // S_k when true, T_k when false
  Flavor flavor = Flavor::interval;
  friend bool operator==(const SymExpr&, const SymExpr&) = default;
};

struct MatrixExpr {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string base;
  MatrixMode mode = MatrixMode::entrywise;
  friend bool operator==(const MatrixExpr&, const MatrixExpr&) = default;
};

struct UnionExpr {
  std::vector<std::string> names;
  friend bool operator==(const UnionExpr&, const UnionExpr&) = default;
};

using StructureExpr =
    std::variant<SemigroupExpr, GroupoidExpr, LoopExpr, GroupExpr, SymExpr, MatrixExpr, UnionExpr>;

struct Let {
  std::string name;
  StructureExpr expr;
  friend bool operator==(const Let&, const Let&) = default;
};

struct Command {
  std::string verb;
  std::vector<std::string> args;
  /// Options in canonical order, e.g. {"format", "csv"}.
  std::vector<std::pair<std::string, std::string>> options;
  friend bool operator==(const Command&, const Command&) = default;
};

struct Statement {
  std::size_t line = 0;
  std::variant<Let, Command> body;
  /// Line numbers are positional; equality compares the statement only.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Throws Error(ParseError) with "line L, column C: ..." in the message.
Script parse_script(const std::string& text);

/// Splits "A; B" into lines for the -e form.
std::string join_inline(const std::string& text);

/// Canonical text: one statement per line, every default made explicit.
std::string render(const Script& script);
std::string render(const Statement& statement);

struct Diagnostic {
  std::size_t line = 0;
  std::string kind;
  std::string message;
};

struct RunResult {
  std::vector<nlohmann::json> outputs;
  std::vector<Diagnostic> diagnostics;
  int exit_status = 0;
};

struct RunOptions {
  std::uint64_t max_order = 1'000'000;
};

/// Runs statements in order. A failing statement is reported with its line
/// and the run continues; exit_status is 1 if any statement failed.
RunResult execute(const Script& script, const RunOptions& options = {});

}  // namespace ialg::script
