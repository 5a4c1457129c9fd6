// ialg: run algebra scripts.
//   ialg run SCRIPT.ial [--pretty]
//   ialg -e "L = loop 5 2; table L" [--pretty]
// Exit status: 0 ok, 1 a statement failed, 2 the script did not parse.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ialg/carrier.hpp"
#include "ialg/error.hpp"
#include "ialg/script.hpp"

namespace {

std::uint64_t max_order_from_env() {
  const char* raw = std::getenv("IALG_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return 1'000'000;
  char* end = nullptr;
  const auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    std::cerr << "ialg: ignoring IALG_MAX_ORDER='" << raw << "'\n";
    return 1'000'000;
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite interval algebra scripts"};
  std::string inline_text;
  std::string path;
  bool pretty = false;
  app.add_option("-e", inline_text, "statements separated by ';'");
  app.add_flag("--pretty", pretty, "print one JSON array instead of one object per line");
  auto* run = app.add_subcommand("run", "run a script file");
  run->add_option("script", path, "script path")->required();
  run->add_flag("--pretty", pretty, "print one JSON array instead of one object per line");
  app.require_subcommand(0, 1);
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (run->parsed()) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "ialg: cannot read " << path << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (!inline_text.empty()) {
    text = ialg::script::join_inline(inline_text);
  } else {
    std::cerr << app.help();
    return 2;
  }

  ialg::script::Script script;
  try {
    script = ialg::script::parse_script(text);
  } catch (const ialg::Error& e) {
    std::cerr << "ialg: " << e.what() << "\n";
    return 2;
  }

  const auto cap = max_order_from_env();
  ialg::set_max_order(cap);
  const auto result = ialg::script::execute(script, {cap});
  if (pretty) {
    std::cout << nlohmann::json(result.outputs).dump(2) << "\n";
  } else {
    for (const auto& out : result.outputs) std::cout << out.dump() << "\n";
  }
  for (const auto& d : result.diagnostics) {
    std::cerr << "ialg: line " << d.line << ": " << d.message << "\n";
  }
  return result.exit_status;
}
