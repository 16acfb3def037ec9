// sandwich: command-line driver for the insertion library.
//
//   sandwich <command> --input <file> [--tol p/q] [--epsilon p/q] [--eta p/q]
//            [--lambda p/q] [--out <dir>] [--svg] [--csv <resolution>]
//
// The human-readable report goes to stdout. With --out, the machine-readable
// document is written to <dir>/<command>.json together with any CSV/SVG files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sandwich/cli/commands.hpp"

namespace fs = std::filesystem;
using sandwich::Rational;
using namespace sandwich::cli;

namespace {

std::function<std::string(std::string&)> rational_check() {
  return [](std::string& s) -> std::string {
    try {
      (void)Rational::parse(s);
      return {};
    } catch (const std::exception&) {
      return "not a rational p/q: " + s;
    }
  };
}

std::string describe(std::string_view command) {
  static const std::map<std::string_view, std::string> text = {
      {"check", "report semicontinuity, sup norms and whether f <= g"},
      {"envelope", "Lipschitz envelopes of f and g, or the Dilworth witness lambda*"},
      {"extract", "finite subfamilies S0, T0 with meet(S0) <= join(T0)"},
      {"insert", "continuous a with f <= a <= g for a positive gap epsilon"},
      {"kt", "continuous h with f - tol <= h <= g, with a certificate"},
      {"extend", "semicontinuous extensions U(f) and L(g) to the compactification"},
      {"obstruct", "look for a point in both level-set closures"},
      {"pipeline", "extend, then insert or report an obstruction"},
      {"sw", "lattice expression in the generators that equals h"},
      {"sample", "CSV samples of every interval function"},
      {"plot", "SVG plot of every interval function"},
      {"verify-cert", "re-check a certificate written by insert, kt or pipeline"},
  };
  const auto it = text.find(command);
  return it == text.end() ? std::string() : it->second;
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact semicontinuous insertion toolkit"};
  app.require_subcommand(1, 1);

  std::string input, out_dir, tol, epsilon, eta, lambda;
  std::size_t csv = 0;
  bool svg = false;

  for (std::string_view name : command_names()) {
    CLI::App* sub = app.add_subcommand(std::string(name), describe(name));
    sub->add_option("--input", input, "input document")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    if (name == "verify-cert") continue;
    sub->add_option("--tol", tol, "tolerance 2^-N")->check(CLI::Validator(rational_check(), "p/q"));
    sub->add_option("--epsilon", epsilon, "gap epsilon")->check(CLI::Validator(rational_check(), "p/q"));
    sub->add_option("--eta", eta, "upper level")->check(CLI::Validator(rational_check(), "p/q"));
    sub->add_option("--lambda", lambda, "lower level or Lipschitz constant")
        ->check(CLI::Validator(rational_check(), "p/q"));
    sub->add_flag("--svg", svg, "also write an SVG plot");
    sub->add_option("--csv", csv, "also write CSV samples at this resolution")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_precondition;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  RunOptions options;
  if (!tol.empty()) options.tol = Rational::parse(tol);
  if (!epsilon.empty()) options.epsilon = Rational::parse(epsilon);
  if (!eta.empty()) options.eta = Rational::parse(eta);
  if (!lambda.empty()) options.lambda = Rational::parse(lambda);
  if (csv > 0) options.csv_resolution = csv;
  options.svg = svg;
  if (const char* cap = std::getenv("SANDWICH_LAMBDA_CAP")) {
    try {
      options.lambda_cap = Rational::parse(cap);
    } catch (const std::exception&) {
      std::cerr << "error: SANDWICH_LAMBDA_CAP is not a rational: " << cap << "\n";
      return exit_precondition;
    }
  }

  std::ifstream in(input, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();

  Report report = run_text(command, buffer.str(), options);
  (report.exit_code == exit_ok || report.exit_code == exit_obstruction ? std::cout : std::cerr)
      << report.text;

  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    bool ok = !ec;
    ok = ok && write_file(fs::path(out_dir) / (command + ".json"), report.document.dump(2) + "\n");
    for (const OutputFile& f : report.files) ok = ok && write_file(fs::path(out_dir) / f.name, f.content);
    if (!ok) {
      std::cerr << "error: cannot write to " << out_dir << "\n";
      return exit_internal;
    }
  }
  return report.exit_code;
}
