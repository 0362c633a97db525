// cia: command line front end of the cognitive agent.
//
// Exit codes: 0 success, 1 syntax or usage error, 2 harness failure.

#include <unistd.h>

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cbl/cbl.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kHarnessFailure = 2;

int run_repl() {
  cbl::Session session;
  const bool interactive = isatty(STDIN_FILENO) != 0;
  if (interactive) std::cout << "cognitive agent; 'help' lists the dialect, 'quit' leaves\n";
  std::string line;
  while (true) {
    if (interactive) std::cout << "cia> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (cbl::detail::trim(line).empty()) continue;
    std::cout << session.respond_line(line) << std::flush;
    try {
      if (std::holds_alternative<cbl::Quit>(cbl::parse_line(line))) break;
    } catch (const std::exception&) {
      // already reported by respond_line
    }
  }
  return kOk;
}

int run_classify(const std::string& text) {
  try {
    const cbl::Formula f = cbl::parse(text);
    cbl::Session session;
    std::cout << session.respond(cbl::ClassifyLine{f});
    return kOk;
  } catch (const cbl::SyntaxError& e) {
    std::cerr << "syntax error at position " << e.position() << ": " << e.message() << "\n";
    return kUsage;
  }
}

int run_dialog(const std::string& line) {
  try {
    const cbl::ReplCommand cmd = cbl::parse_line(line);
    cbl::Session session;
    std::cout << session.respond(cmd);
    return kOk;
  } catch (const cbl::SyntaxError& e) {
    std::cerr << "syntax error at position " << e.position() << ": " << e.message() << "\n";
  } catch (const cbl::UnknownCommandError& e) {
    std::cerr << e.what() << "\n";
  }
  return kUsage;
}

int run_render(const std::string& text, const std::string& polarity, const std::string& marker,
               const std::string& format) {
  try {
    const cbl::Formula f = cbl::parse(text);
    const auto p = polarity == "pos" ? cbl::Polarity::Positive : cbl::Polarity::Negative;
    const auto m = marker == "assert" ? cbl::Marker::Assert : cbl::Marker::Query;
    const auto tree = cbl::discourse(cbl::initial_sequent(f, p), m);
    std::cout << cbl::render_tree(tree, *cbl::tree_format_from_string(format));
    return kOk;
  } catch (const cbl::SyntaxError& e) {
    std::cerr << "syntax error at position " << e.position() << ": " << e.message() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cia - a conversational agent for propositional binary logic"};
  app.require_subcommand(1);

  auto* repl = app.add_subcommand("repl", "interactive session in the cognitive dialect");

  std::string formula;
  auto* classify = app.add_subcommand("classify", "classify a formula and answer every input form");
  classify->add_option("formula", formula, "formula text")->required();

  std::string line;
  auto* dialog = app.add_subcommand("dialog", "answer one line of the cognitive dialect");
  dialog->add_option("line", line, "e.g. \"(?): p -> q is false\"")->required();

  std::string batch_path;
  std::string batch_format = "text";
  auto* batch = app.add_subcommand("batch", "process a file of dialect lines");
  batch->add_option("file", batch_path, "input file, one line per row, '#' comments")
      ->required();
  batch->add_option("--format", batch_format, "text or json (json lines)")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t trials = 1000;
  std::size_t atoms = 4;
  std::size_t depth = 5;
  std::uint64_t seed = 42;
  auto* turing = app.add_subcommand("turing", "run the Turing-test harness against the oracle");
  turing->add_option("--trials", trials, "number of random inputs")->check(CLI::PositiveNumber);
  turing->add_option("--atoms", atoms, "atom pool size")->check(CLI::PositiveNumber);
  turing->add_option("--depth", depth, "maximum formula depth");
  turing->add_option("--seed", seed, "random seed");

  std::string render_formula;
  std::string polarity = "pos";
  std::string marker = "query";
  std::string render_format = "text";
  auto* render = app.add_subcommand("render", "print the deductive discourse of a formula");
  render->add_option("formula", render_formula, "formula text")->required();
  render->add_option("--polarity", polarity, "pos: t -> (p | f), neg: t -> ((p -> f) | f)")
      ->check(CLI::IsMember({"pos", "neg"}));
  render->add_option("--marker", marker, "assert or query")
      ->check(CLI::IsMember({"assert", "query"}));
  render->add_option("--format", render_format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (repl->parsed()) return run_repl();
  if (classify->parsed()) return run_classify(formula);
  if (dialog->parsed()) return run_dialog(line);
  if (render->parsed()) return run_render(render_formula, polarity, marker, render_format);
  if (batch->parsed()) {
    try {
      return cbl::batch(batch_path,
                        batch_format == "json" ? cbl::BatchFormat::Json : cbl::BatchFormat::Text,
                        std::cout);
    } catch (const cbl::FileNotFoundError& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }
  if (turing->parsed()) {
    const cbl::TuringReport report = cbl::turing_test(trials, atoms, depth, seed);
    std::cout << cbl::summary(report);
    return report.passed() ? kOk : kHarnessFailure;
  }
  return kUsage;
}
