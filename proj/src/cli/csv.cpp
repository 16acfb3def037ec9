#include "sandwich/cli/csv.hpp"

#include <algorithm>

namespace sandwich::cli {
namespace {

std::vector<CsvRow> rows_for(const PLFunction& carrier, std::span<const Rational> removed,
                             std::size_t resolution) {
  if (resolution == 0) throw ParameterError("CSV resolution must be positive");
  auto value_at = [&](const Rational& x) -> std::optional<Rational> {
    if (std::binary_search(removed.begin(), removed.end(), x)) return std::nullopt;
    return carrier(x);
  };
  std::vector<CsvRow> rows;
  const Rational step = (carrier.hi() - carrier.lo()) / Rational(static_cast<long long>(resolution));
  for (std::size_t i = 0; i <= resolution; ++i) {
    Rational x = carrier.lo() + Rational(static_cast<long long>(i)) * step;
    rows.push_back({x, value_at(x), "interior"});
  }
  // Removed points are breakpoints of the model even where the carrier is smooth.
  std::vector<Rational> xs;
  for (const Breakpoint& p : carrier.breakpoints()) xs.push_back(p.x);
  xs.insert(xs.end(), removed.begin(), removed.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const Rational& x : xs) rows.push_back({x, value_at(x), "breakpoint"});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CsvRow& a, const CsvRow& b) { return a.x < b.x; });
  return rows;
}

}  // namespace

std::vector<CsvRow> sample_rows(const PLFunction& f, std::size_t resolution) {
  return rows_for(f, {}, resolution);
}

std::vector<CsvRow> sample_rows(const PuncturedFunction& f, std::size_t resolution) {
  return rows_for(f.carrier(), f.removed(), resolution);
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::string out = "x,value,tag\n";
  for (const CsvRow& row : rows) {
    out += row.x.str();
    out += ',';
    if (row.value) out += row.value->str();
    out += ',';
    out += row.tag;
    out += '\n';
  }
  return out;
}

}  // namespace sandwich::cli
