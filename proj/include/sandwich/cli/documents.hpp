#pragma once

#include <span>
#include <string>
#include <vector>

#include "sandwich/cli/located_json.hpp"
#include "sandwich/condition_c.hpp"
#include "sandwich/extension.hpp"
#include "sandwich/finite_function.hpp"
#include "sandwich/insertion.hpp"
#include "sandwich/lattice_expr.hpp"
#include "sandwich/pl_function.hpp"
#include "sandwich/seq_function.hpp"

namespace sandwich::cli {

using json = nlohmann::json;

// Writers. Rationals are always emitted as "p/q" strings (integers as "p").

json to_json(const Rational& r);
/// Breakpoint records {x, left?, value, right?}; endpoints omit the outward limit.
json to_json(const PLFunction& f);
/// As above, with a record whose value is null at every removed point.
json to_json(const PuncturedFunction& f);
/// {prefix, period, infinity?}.
json to_json(const SeqFunction& f);
json to_json(const FiniteFunction& f);
json to_json(const LatticeExpr& e);
json to_json(const ExtractionResult& r);
json to_json(const Obstruction& o);
json to_json(const InsertionCertificate& c);

/// Reads values out of a LocatedJson, reporting failures as ParseError with
/// the offending line and JSON pointer.
class DocumentReader {
 public:
  explicit DocumentReader(const LocatedJson& doc) : doc_(doc) {}

  const LocatedJson& doc() const { return doc_; }
  const json& at(const std::string& pointer) const;
  bool has(const std::string& pointer) const;

  /// Rejects members of the object at `pointer` not listed in `allowed`.
  void only_fields(const std::string& pointer, std::initializer_list<std::string_view> allowed) const;

  Rational rational(const std::string& pointer) const;
  std::vector<Rational> rationals(const std::string& pointer) const;
  std::string string(const std::string& pointer) const;
  std::vector<std::string> strings(const std::string& pointer) const;
  bool boolean(const std::string& pointer) const;
  std::size_t count(const std::string& pointer) const;

  /// Breakpoint records over [lo, hi]. With `removed` nonempty, records at
  /// removed points must have a null value and every removed point must have
  /// a record; the result's carrier then has those values normalized.
  PLFunction pl_function(const std::string& pointer) const;
  PuncturedFunction punctured_function(const std::string& pointer,
                                       std::span<const Rational> removed) const;
  SeqFunction seq_function(const std::string& pointer) const;
  FiniteFunction finite_function(const std::string& pointer) const;
  LatticeExpr lattice_expr(const std::string& pointer) const;
  InsertionCertificate certificate(const std::string& pointer) const;

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    doc_.fail(pointer, message);
  }

 private:
  PLFunction breakpoint_records(const std::string& pointer, std::span<const Rational> removed) const;

  const LocatedJson& doc_;
};

}  // namespace sandwich::cli
