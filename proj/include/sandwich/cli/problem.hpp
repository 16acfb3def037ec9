#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sandwich/extension.hpp"
#include "sandwich/finite_function.hpp"
#include "sandwich/pl_function.hpp"
#include "sandwich/seq_function.hpp"

namespace sandwich::cli {

enum class Model { pl_interval, dense_interval, one_point, finite };

std::string_view model_name(Model m);

using FunctionValue = std::variant<PLFunction, PuncturedFunction, SeqFunction, FiniteFunction>;

struct NamedFunction {
  std::string name;
  FunctionValue value;
  bool operator==(const NamedFunction&) const = default;
};

struct Parameters {
  std::optional<Rational> epsilon;
  std::optional<Rational> tol;
  std::optional<Rational> eta;
  std::optional<Rational> lambda;
  std::optional<Rational> delta;
  std::optional<std::vector<Rational>> samples;
  bool operator==(const Parameters&) const = default;
};

/// A parsed input document.
///
/// Functions are kept in document order. Which function plays which role is
/// decided by name: commands look for `f` (lower/usc side), `g` (upper/lsc
/// side) and `h` (target), and `families.S`, `families.T`, `generators` list
/// names of other functions.
struct ProblemSpec {
  Model model = Model::pl_interval;
  std::optional<std::pair<Rational, Rational>> domain;
  std::vector<Rational> removed;  // dense-interval only
  std::optional<std::size_t> size;  // finite only
  std::vector<NamedFunction> functions;
  std::vector<std::string> family_s;
  std::vector<std::string> family_t;
  std::vector<std::string> generators;
  Parameters parameters;

  const FunctionValue* find(std::string_view name) const;
  bool operator==(const ProblemSpec&) const = default;
};

/// Throws ParseError naming the line and field on any schema violation.
ProblemSpec parse_problem(std::string_view text);

/// Serializes back to the input format; parse_problem(emit_problem(p)) == p.
std::string emit_problem(const ProblemSpec& spec);

}  // namespace sandwich::cli
