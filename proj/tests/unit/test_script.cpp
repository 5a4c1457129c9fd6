#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ialg/error.hpp"
#include "ialg/script.hpp"

using namespace ialg;
using namespace ialg::script;
namespace fs = std::filesystem;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ialg-script-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_SUITE("script") {

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error("L = loop 5 2\ntable L --format xml").find("line 2") != std::string::npos);
  CHECK(parse_error("L = lop 5 2").find("line 1, column 5") != std::string::npos);
  CHECK(parse_error("table Q").find("Q") != std::string::npos);
  CHECK(parse_error("L = loop 5 2\ncheck L flexible-ish").find("flexible-ish") != std::string::npos);
}

TEST_CASE("render round-trips") {
  const std::string text =
      "A = semigroup zmod 12 mul\n"
      "G = groupoid zmod 10 1/2 3 plain\n"
      "L = loop 7 3\n"
      "U = group units 5\n"
      "S = sym 3 group\n"
      "M = matrix 2 2 of A mul\n"
      "P = union A U\n"
      "table L\n"
      "ideals A --side left\n"
      "subs A --max 3 --class group\n"
      "loopinfo L normalizers 7\n"
      "audit T-IDEM --range n=2..5\n";
  const auto s = parse_script(text);
  CHECK(s.statements.size() == 12);
  const auto again = parse_script(render(s));
  CHECK(again == s);
  CHECK(render(again) == render(s));
  CHECK(parse_script(join_inline("L = loop 5 2; table L")) == parse_script("L = loop 5 2\ntable L"));
}

TEST_CASE("execution is deterministic") {
  const auto s = parse_script("A = semigroup zmod 10 mul\nfind A idempotents\nsubs A\naudit T-COMM-LOOP");
  const auto a = execute(s);
  const auto b = execute(s);
  CHECK(a.exit_status == 0);
  REQUIRE(a.outputs.size() == b.outputs.size());
  for (std::size_t i = 0; i < a.outputs.size(); ++i) CHECK(a.outputs[i].dump() == b.outputs[i].dump());
}

TEST_CASE("tables and exports") {
  const auto r = execute(parse_script("L = loop 5 2\ntable L"));
  REQUIRE(r.outputs.size() == 1);
  CHECK(count_lines(r.outputs[0]["csv"].get<std::string>()) == 7);

  const auto path = scratch("z12u5.json");
  fs::remove(path);
  const auto e = execute(parse_script("A = group zmod 12\nB = group units 5\nP = union A B\nexport P " +
                                      path.string()));
  CHECK(e.exit_status == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["elements"].size() == 48);
  CHECK(j["table"].size() == 48);
}

TEST_CASE("failures are reported per line and the run continues") {
  const auto r = execute(parse_script("L = loop 9 3\nA = group zmod 4\nexport A /nonexistent-dir/x.csv\nclassify A"));
  CHECK(r.exit_status == 1);
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].line == 1);
  CHECK(r.diagnostics[0].kind == "BadLoopParams");
  CHECK(r.diagnostics[1].line == 3);
  CHECK(r.diagnostics[1].kind == "IoError");
  CHECK(r.outputs.back()["label"] == "group");
}

TEST_CASE("empty scripts and the order cap") {
  CHECK(execute(parse_script("")).exit_status == 0);
  CHECK(execute(parse_script("# nothing\n\n")).outputs.empty());
  RunOptions small;
  small.max_order = 10;
  const auto r = execute(parse_script("A = group zmod 11"), small);
  CHECK(r.exit_status == 1);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].kind == "OrderTooLarge");
}

}
