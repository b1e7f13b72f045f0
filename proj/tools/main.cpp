// Command-line front end: batch script execution and an interactive REPL
// over the divisor-class-group pipeline.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <miura/script.hpp>

namespace {

miura::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return miura::OutputFormat::json;
  return miura::OutputFormat::text;
}

int run_file(const std::string& path, miura::OutputFormat format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return miura::run_script_text(buffer.str(), std::cout, format, &std::cerr);
}

int run_repl(miura::OutputFormat format) {
  miura::Interpreter interp(std::cout, format);
  std::string line;
  std::size_t lineno = 0;
  while (!interp.finished()) {
    std::cout << "miura> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    ++lineno;
    try {
      if (auto stmt = miura::detail::parse_statement_line(line, lineno)) interp.execute(*stmt);
    } catch (const miura::Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor class group arithmetic on Miura-form curves"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string script_path;

  CLI::App* run = app.add_subcommand("run", "execute a script file");
  run->add_option("file", script_path, "script to execute")->required();
  run->add_option("--format", format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("--format", format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_file(script_path, parse_format(format_name));
  return run_repl(parse_format(format_name));
}
