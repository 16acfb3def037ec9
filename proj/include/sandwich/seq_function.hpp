#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sandwich/rational.hpp"

namespace sandwich {

/// Eventually periodic rational sequence on ℕ, optionally extended by a value
/// at the point ∞ of the one-point compactification ℕ ∪ {∞}.
///
/// Canonical form keeps the shortest period and the shortest prefix, so two
/// instances are equal iff they agree at every n (and at ∞).
class SeqFunction {
 public:
  /// Throws ParameterError when the period is empty.
  static SeqFunction make(std::vector<Rational> prefix, std::vector<Rational> period,
                          std::optional<Rational> infinity_value = std::nullopt);
  static SeqFunction constant(const Rational& c,
                              std::optional<Rational> infinity_value = std::nullopt);

  std::span<const Rational> prefix() const { return prefix_; }
  std::span<const Rational> period() const { return period_; }
  const std::optional<Rational>& infinity_value() const { return infinity_; }
  bool defined_at_infinity() const { return infinity_.has_value(); }

  Rational at(std::uint64_t n) const;

  /// limsup_{n→∞} = max(period); liminf = min(period).
  Rational limsup() const;
  Rational liminf() const;

  SeqFunction with_infinity(std::optional<Rational> v) const;
  SeqFunction restricted_to_naturals() const { return with_infinity(std::nullopt); }

  bool operator==(const SeqFunction&) const = default;

 private:
  SeqFunction() = default;

  std::vector<Rational> prefix_;
  std::vector<Rational> period_;
  std::optional<Rational> infinity_;
};

/// sup over ℕ (and ∞ when defined) of |f|.
Rational sup_norm(const SeqFunction& f);

/// Pointwise op(a(n), b(n)); the ∞ value is op(a(∞), b(∞)) when both exist.
template <class Op>
SeqFunction zip_with(const SeqFunction& a, const SeqFunction& b, Op op) {
  const std::size_t prefix_len = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t period_len = std::lcm(a.period().size(), b.period().size());
  std::vector<Rational> prefix, period;
  prefix.reserve(prefix_len);
  period.reserve(period_len);
  for (std::size_t n = 0; n < prefix_len; ++n) prefix.push_back(op(a.at(n), b.at(n)));
  for (std::size_t n = prefix_len; n < prefix_len + period_len; ++n) {
    period.push_back(op(a.at(n), b.at(n)));
  }
  std::optional<Rational> inf;
  if (a.infinity_value() && b.infinity_value()) inf = op(*a.infinity_value(), *b.infinity_value());
  return SeqFunction::make(std::move(prefix), std::move(period), std::move(inf));
}

}  // namespace sandwich
