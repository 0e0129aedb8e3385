#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "autalg/cli.hpp"

using autalg::InputError;
using autalg::JobSpec;
using nlohmann::json;

namespace {

void fail(const std::string& msg, const std::string& format) {
  if (format == "text") {
    std::cerr << "error: " << msg << "\n";
  } else {
    std::cout << json{{"schema", 1}, {"error", msg}}.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide automorphisms, coordinates and tameness of polynomial maps"};
  JobSpec flags;
  std::string vars;
  std::string example_name;
  app.add_option("command", flags.command,
                 "check-aut | check-coord | check-z-tame | check-z-tame-coord | check-z-coord | ge2 | jacobian | "
                 "metabelian | eval-word | example | exp-derivation | smith-check")
      ->required();
  app.add_option("name", example_name, "example name (nagata, nagata-qz, anick, cohn, sigma-h, omega-m, mennicke, nagata-exp)");
  auto* o_alg = app.add_option("--algebra", flags.algebra, "comm | free")->check(CLI::IsMember({"comm", "free"}));
  auto* o_vars = app.add_option("--vars", vars, "comma-separated variable names");
  auto* o_fix = app.add_flag("--fix-z", flags.fix_z, "the last variable z is fixed");
  auto* o_field = app.add_option("--field", flags.field, "q | q(z)")->check(CLI::IsMember({"q", "q(z)"}));
  app.add_option("--order", flags.order, "lex | deglex | degrevlex")
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
  app.add_option("--format", flags.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", flags.cap, "series cap for exp of a derivation");
  auto* o_e = app.add_option("-e,--expr", flags.exprs, "one expression per coordinate");
  auto* o_m = app.add_option("-m,--matrix", flags.matrix, "2x2 matrix: rows by ';', entries by ','");
  app.add_option("--power", flags.m, "m for the omega-m example");
  auto* o_w = app.add_option("--w", flags.w, "kernel element w for w*delta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  flags.example = example_name;
  if (!vars.empty()) flags.vars = autalg::split_names(vars);

  try {
    JobSpec job = flags;
    const bool needs_stdin = o_e->count() == 0 && o_m->count() == 0 && flags.command != "example";
    if (needs_stdin && !isatty(fileno(stdin))) {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      json piped;
      try {
        piped = json::parse(text);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("stdin is not a JSON job: ") + e.what());
      }
      job = autalg::job_from_json(piped, flags);
      // Flags given explicitly win over piped fields.
      if (o_alg->count()) job.algebra = flags.algebra;
      if (o_vars->count()) job.vars = flags.vars;
      if (o_fix->count()) job.fix_z = flags.fix_z;
      if (o_field->count()) job.field = flags.field;
      if (o_w->count()) job.w = flags.w;
    }
    const auto result = autalg::run(job);
    if (flags.format == "text") {
      std::cout << autalg::render_text(result.out);
    } else {
      std::cout << result.out.dump(2) << "\n";
    }
    return result.exit_code;
  } catch (const InputError& e) {
    fail(e.what(), flags.format);
    return 1;
  } catch (const std::invalid_argument& e) {
    fail(e.what(), flags.format);
    return 1;
  }
}
