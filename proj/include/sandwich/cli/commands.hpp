#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sandwich/cli/documents.hpp"
#include "sandwich/cli/problem.hpp"

namespace sandwich::cli {

/// Process exit statuses. The numbering is a stable scripting contract.
enum ExitStatus : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_precondition = 2,
  exit_obstruction = 3,
};

/// Command-line overrides. Each set value replaces the matching entry of the
/// document's "parameters" object.
struct RunOptions {
  std::optional<Rational> tol;
  std::optional<Rational> epsilon;
  std::optional<Rational> eta;
  std::optional<Rational> lambda;
  std::optional<std::size_t> csv_resolution;
  bool svg = false;
  std::optional<Rational> lambda_cap;
};

struct OutputFile {
  std::string name;
  std::string content;
};

struct Report {
  int exit_code = exit_ok;
  std::string text;  // human-readable summary
  json document;     // machine-readable result (certificate where applicable)
  std::vector<OutputFile> files;
};

/// Every accepted command name, including "verify-cert".
std::span<const std::string_view> command_names();

/// Runs a problem command. Module exceptions propagate; use run_text for the
/// exit-status mapping.
Report run(std::string_view command, const ProblemSpec& spec, const RunOptions& options);

/// Re-checks a certificate document produced by insert, kt or pipeline using
/// only order and norm comparisons. Rejection gives exit_precondition.
Report verify_certificate_document(std::string_view text);

/// Parses `input` (a problem, or a certificate for "verify-cert"), runs the
/// command and maps every failure onto an exit status with a report.
Report run_text(std::string_view command, std::string_view input, const RunOptions& options);

}  // namespace sandwich::cli
