#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "sandwich/error.hpp"

namespace sandwich::cli {

/// Malformed input document. `line` is 1-based; `field` is a JSON pointer
/// ("" for the document root).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A parsed JSON document plus the source line of every value, keyed by
/// JSON pointer.
class LocatedJson {
 public:
  /// Throws ParseError on syntax errors.
  static LocatedJson parse(std::string_view text);

  const nlohmann::json& root() const { return root_; }
  /// Line of the value at `pointer`, or of its nearest recorded ancestor.
  std::size_t line_of(const std::string& pointer) const;

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    throw ParseError(line_of(pointer), pointer, message);
  }

 private:
  nlohmann::json root_;
  std::map<std::string, std::size_t> lines_;
};

}  // namespace sandwich::cli
