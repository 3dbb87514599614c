#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domikit/commands.hpp"
#include "domikit/errors.hpp"

namespace {

using namespace domikit;

SystemDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_system(text.str());
}

struct Invocation {
  std::string file;
  std::string method = "auto";
  CommandOptions options;
  bool no_timing = false;
};

CLI::App* add_command(CLI::App& app, const char* name, const char* help, Invocation& inv) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("file", inv.file, "system document (JSON)")->required();
  sub->add_option("--level,-k", inv.options.level, "system level k")->required();
  sub->add_option("--guard", inv.options.guard, "largest generator count for formation counting");
  sub->add_flag("--json", inv.options.json, "JSON output");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed domination of multistate monotone systems"};
  app.require_subcommand(1);

  Invocation inv;
  add_command(app, "paths", "list minimal path vectors of a level", inv);

  auto* domination = add_command(app, "domination", "signed domination of a level", inv);
  domination->add_option("--method", inv.method, "formations|mobius|pivotal|binary|auto")
      ->check(CLI::IsMember({"formations", "mobius", "pivotal", "binary", "auto"}));
  domination->add_flag("--table", inv.options.table, "print delta over the join closure");

  auto* reliability = add_command(app, "reliability", "reliability of a level", inv);
  reliability->add_flag("--verify", inv.options.verify, "cross-check by enumeration");
  reliability->add_flag("--rational", inv.options.rational, "exact rational output");

  auto* verify = add_command(app, "verify", "compare every applicable method", inv);
  verify->add_flag("--no-timing", inv.no_timing, "omit timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitSuccess : kExitUsage;
  }

  inv.options.method = *parse_method(inv.method);
  inv.options.timing = !inv.no_timing;

  try {
    const SystemDocument doc = load(inv.file);
    if (app.got_subcommand("paths")) {
      std::cout << render(cmd_paths(doc, inv.options), inv.options);
    } else if (app.got_subcommand("domination")) {
      std::cout << render(cmd_domination(doc, inv.options), inv.options);
    } else if (app.got_subcommand("reliability")) {
      std::cout << render(cmd_reliability(doc, inv.options), inv.options);
    } else {
      const auto report = cmd_verify(doc, inv.options);
      std::cout << render(report, inv.options);
      if (!report.agreement) return kExitDisagreement;
    }
  } catch (const std::exception& e) {
    std::cerr << "domikit: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitSuccess;
}
