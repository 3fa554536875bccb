// penv: command-line front end for partial actions of finite groups.
//
// Exit codes: 0 all checks pass, 1 a check failed (witness printed),
// 2 input or usage error.

#include "penv/commands.hpp"
#include "penv/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Args {
  std::string file;
  std::string format = "text";
  std::string dot_path;
  std::string set;
  std::string open_g = "all";
  std::string kind = "delta";
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Args& args) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("file", args.file, "action specification (JSON)")->required();
  sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"text", "json"}));
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial actions of finite groups: validation, enveloping spaces, Vaught transforms, selectors"};
  app.require_subcommand(1);
  Args args;

  add_command(app, "validate", "check the partial-action axioms", args);
  auto* glob = add_command(app, "globalize", "build the enveloping space and check it", args);
  glob->add_option("--dot", args.dot_path, "write the specialization preorder and mu graph as DOT");
  add_command(app, "orbits", "orbit table, stabilizers and G^x sets", args);
  auto* vaught = add_command(app, "vaught", "Vaught transform of a set", args);
  vaught->add_option("--set", args.set, "comma-separated point names")->required();
  vaught->add_option("--open-g", args.open_g, "comma-separated element indices, or all");
  vaught->add_option("--kind", args.kind, "transform kind")->check(CLI::IsMember({"delta", "star"}));
  add_command(app, "selector", "selector, transversal, tau topology, bireducibility", args);
  auto* report = add_command(app, "report", "everything", args);
  report->add_option("--dot", args.dot_path, "write the specialization preorder and mu graph as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(args.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << args.file << '\n';
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    const penv::ActionSpec spec = penv::parse_spec(buf.str());
    penv::CommandOptions opts;
    opts.want_dot = !args.dot_path.empty();
    if (command == "vaught") {
      opts.set = args.set;
      opts.open_g = args.open_g;
      opts.kind = args.kind;
    }
    const penv::CommandResult result = penv::run_command(command, spec, opts);
    std::cout << (args.format == "json" ? penv::render_json(command, spec, result)
                                        : penv::render_text(command, spec, result));
    if (opts.want_dot) {
      std::ofstream dot(args.dot_path, std::ios::binary);
      if (!dot) {
        std::cerr << "error: cannot write " << args.dot_path << '\n';
        return 2;
      }
      dot << result.dot;
    }
    return result.report.ok() ? 0 : 1;
  } catch (const penv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == penv::ErrorKind::AxiomViolation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
