#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "render.hpp"

using namespace headorder;

namespace {

std::string read_input(const std::string& where) {
  if (where == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  // inline documents are accepted as well as paths
  if (where.find_first_not_of(" \t\r\n") != std::string::npos &&
      where[where.find_first_not_of(" \t\r\n")] == '{') {
    return where;
  }
  std::ifstream in(where);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + where);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radical idealizer chains of graduated orders and Brauer tree blocks"};
  cli::Options opts;
  std::string input, oracle = "off", format = "json", grid, positional;
  app.add_option("name", positional, "Same as --command");
  app.add_option("--command", opts.command, "check|radical|chain|head|closed-form|tree|verify|sweep");
  app.add_option("--input", input, "Document path, '-' for stdin, or an inline JSON document");
  app.add_option("--max-steps", opts.max_steps, "Step budget for chains");
  app.add_option("--oracle", oracle, "Certify steps with the finite algebra oracle")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--grid", grid, "n=<lo..hi>,a=<lo..hi>");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--prime", opts.prime, "Oracle prime for documents without one")->check(CLI::Range(2, 97));
  app.add_option("--workers", opts.workers, "Threads for sweep (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), cli::kExitInput);
  }

  try {
    if (opts.command.empty()) opts.command = positional;
    if (!positional.empty() && positional != opts.command) {
      throw Error(ErrorKind::InvalidArgument, "conflicting commands");
    }
    if (!cli::known_command(opts.command)) {
      throw Error(ErrorKind::InvalidArgument, "unknown or missing command '" + opts.command + "'");
    }
    opts.oracle = oracle == "on";
    if (!grid.empty()) opts.grid = cli::parse_grid(grid);
    std::optional<Document> doc;
    if (!input.empty()) {
      doc = parse_document_text(read_input(input));
    } else if (cli::needs_input(opts)) {
      throw Error(ErrorKind::InvalidArgument, "missing --input");
    }
    const cli::Outcome out = cli::run(opts, doc);
    if (format == "pretty") {
      std::cout << cli::render_pretty(out.report);
    } else {
      std::cout << out.report.dump(2) << '\n';
    }
    return out.exit_code;
  } catch (const std::exception& e) {
    Json err;
    err["type"] = "error";
    err["schema_version"] = kSchemaVersion;
    err["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return cli::kExitInput;
  }
}
