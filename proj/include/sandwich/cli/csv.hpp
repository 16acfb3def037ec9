#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sandwich/extension.hpp"
#include "sandwich/pl_function.hpp"

namespace sandwich::cli {

struct CsvRow {
  Rational x;
  std::optional<Rational> value;  // empty at a removed point
  std::string tag;                // "interior" or "breakpoint"
  bool operator==(const CsvRow&) const = default;
};

/// r + 1 evenly spaced rows tagged "interior" plus one "breakpoint" row per
/// breakpoint, sorted by abscissa. Throws ParameterError for r == 0.
std::vector<CsvRow> sample_rows(const PLFunction& f, std::size_t resolution);
std::vector<CsvRow> sample_rows(const PuncturedFunction& f, std::size_t resolution);

/// Header "x,value,tag" followed by one line per row.
std::string to_csv(const std::vector<CsvRow>& rows);

}  // namespace sandwich::cli
