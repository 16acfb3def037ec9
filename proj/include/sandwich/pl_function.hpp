#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sandwich/rational.hpp"

namespace sandwich {

/// One breakpoint of a piecewise-linear function: the one-sided limits on
/// either side and the value attained at x itself.
///
/// At the left endpoint of the domain `left` mirrors `value`; at the right
/// endpoint `right` mirrors `value`. Only the inward limit carries data there.
struct Breakpoint {
  Rational x;
  Rational left;
  Rational value;
  Rational right;

  bool operator==(const Breakpoint&) const = default;
};

/// Bounded piecewise-linear function with jump discontinuities on a closed
/// rational interval [lo, hi].
///
/// Between consecutive breakpoints b_i < b_{i+1} the function is the affine
/// interpolation from (b_i, right_i) to (b_{i+1}, left_{i+1}). Instances are
/// always canonical: no interior breakpoint is removable, so structural
/// equality coincides with pointwise equality.
class PLFunction {
 public:
  /// Validates and canonicalizes. Throws DomainError when breakpoints are
  /// unsorted, duplicated, or fewer than two.
  static PLFunction from_breakpoints(std::vector<Breakpoint> points);

  static PLFunction constant(const Rational& lo, const Rational& hi, const Rational& c);
  /// The affine function through (lo, y_lo) and (hi, y_hi).
  static PLFunction affine(const Rational& lo, const Rational& hi, const Rational& y_lo,
                           const Rational& y_hi);
  /// Continuous interpolant through the given (x, y) nodes, x strictly increasing.
  static PLFunction interpolant(std::span<const std::pair<Rational, Rational>> nodes);

  const Rational& lo() const { return points_.front().x; }
  const Rational& hi() const { return points_.back().x; }
  std::span<const Breakpoint> breakpoints() const { return points_; }
  std::size_t piece_count() const { return points_.size() - 1; }

  bool contains(const Rational& x) const { return lo() <= x && x <= hi(); }

  /// f(x). Throws DomainError outside [lo, hi].
  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;
  /// lim_{y -> x-}; at lo this is f(lo).
  Rational left_limit(const Rational& x) const;
  /// lim_{y -> x+}; at hi this is f(hi).
  Rational right_limit(const Rational& x) const;

  /// Slope of piece i, i.e. on (b_i, b_{i+1}).
  Rational slope(std::size_t piece) const;
  Rational max_abs_slope() const;

  bool is_continuous() const;

  /// Same function with f(x) replaced by v. x must lie in the domain.
  PLFunction with_value(const Rational& x, const Rational& v) const;

  bool same_domain(const PLFunction& other) const {
    return lo() == other.lo() && hi() == other.hi();
  }

  bool operator==(const PLFunction&) const = default;

 private:
  explicit PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {}

  std::size_t piece_containing(const Rational& x) const;

  std::vector<Breakpoint> points_;
};

/// Outcome of an exact order comparison; on failure `witness` is a point
/// where the claimed inequality is violated.
struct Comparison {
  bool holds = true;
  std::optional<Rational> witness;

  explicit operator bool() const { return holds; }
};

/// Decides f <= g everywhere on the common domain.
Comparison compare_le(const PLFunction& f, const PLFunction& g);

PLFunction meet(const PLFunction& f, const PLFunction& g);
PLFunction join(const PLFunction& f, const PLFunction& g);
PLFunction meet_all(std::span<const PLFunction> fs);
PLFunction join_all(std::span<const PLFunction> fs);

/// alpha * f + beta * g.
PLFunction affine_combination(const Rational& alpha, const PLFunction& f, const Rational& beta,
                              const PLFunction& g);

PLFunction operator+(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f);
PLFunction operator*(const Rational& c, const PLFunction& f);
PLFunction operator+(const PLFunction& f, const Rational& c);
PLFunction operator-(const PLFunction& f, const Rational& c);

/// sup |f|, attained at a breakpoint value or a one-sided limit.
Rational sup_norm(const PLFunction& f);

}  // namespace sandwich
