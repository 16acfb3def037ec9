#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "sandwich/insertion.hpp"
#include "sandwich/pl_function.hpp"
#include "sandwich/semicont.hpp"
#include "sandwich/seq_function.hpp"

namespace sandwich {

// ---------------------------------------------------------------------------
// Space models
// ---------------------------------------------------------------------------

/// Y = [lo, hi] compact; X = Y \ D for a finite set D of interior points.
struct DenseIntervalModel {
  Rational lo;
  Rational hi;
  std::vector<Rational> removed;  // sorted, distinct, strictly inside (lo, hi)

  bool operator==(const DenseIntervalModel&) const = default;
};

/// Function on X = [lo, hi] \ D, stored as a PL carrier on [lo, hi] whose
/// one-sided limits at each removed point are data. The carrier's point value
/// at a removed point is normalized to the larger limit and never read.
class PuncturedFunction {
 public:
  /// Throws DomainError when a removed point is not strictly inside the domain.
  static PuncturedFunction make(const PLFunction& carrier, std::vector<Rational> removed);

  const PLFunction& carrier() const { return carrier_; }
  std::span<const Rational> removed() const { return removed_; }
  DenseIntervalModel model() const { return {carrier_.lo(), carrier_.hi(), removed_}; }
  bool is_removed(const Rational& x) const;

  /// f(x) for x in X; throws DomainError at removed points.
  Rational eval(const Rational& x) const;
  Rational operator()(const Rational& x) const { return eval(x); }
  Rational left_limit(const Rational& x) const { return carrier_.left_limit(x); }
  Rational right_limit(const Rational& x) const { return carrier_.right_limit(x); }

  bool operator==(const PuncturedFunction&) const = default;

 private:
  PuncturedFunction(PLFunction carrier, std::vector<Rational> removed)
      : carrier_(std::move(carrier)), removed_(std::move(removed)) {}

  PLFunction carrier_;
  std::vector<Rational> removed_;
};

/// Semicontinuity at the points of X only.
SemicontinuityCheck is_usc(const PuncturedFunction& f);
SemicontinuityCheck is_lsc(const PuncturedFunction& g);
/// f <= g at every point of X. Throws DomainError unless the models agree.
Comparison compare_le(const PuncturedFunction& f, const PuncturedFunction& g);
/// F restricted to X equals f exactly.
bool restricts_to(const PLFunction& F, const PuncturedFunction& f);

/// Points of ℕ are isolated, so only ∞ can violate semicontinuity:
/// usc iff F(∞) >= limsup, lsc iff F(∞) <= liminf. Vacuous without an ∞ value.
bool is_usc(const SeqFunction& F);
bool is_lsc(const SeqFunction& F);
/// f <= g on ℕ, and at ∞ when both are defined there. Witness is the index
/// (or -1 for ∞).
Comparison compare_le(const SeqFunction& f, const SeqFunction& g);

// ---------------------------------------------------------------------------
// Extension operators
// ---------------------------------------------------------------------------

/// U(f): fills each removed point with the larger one-sided limit.
/// Throws PreconditionError (SemicontinuityViolation) when f is not usc on X.
PLFunction extend_upper(const PuncturedFunction& f);
/// L(g): fills each removed point with the smaller one-sided limit.
PLFunction extend_lower(const PuncturedFunction& g);
/// U(f)(∞) = limsup f. Throws ParameterError if f already has an ∞ value.
SeqFunction extend_upper(const SeqFunction& f);
/// L(g)(∞) = liminf g.
SeqFunction extend_lower(const SeqFunction& g);

/// (U(f), U(f) + χ_{Y \ X}): two distinct usc extensions of f.
/// Throws PreconditionError when X = Y.
std::pair<PLFunction, PLFunction> usc_extension_nonunique_demo(const PuncturedFunction& f);
std::pair<SeqFunction, SeqFunction> usc_extension_nonunique_demo(const SeqFunction& f);

// ---------------------------------------------------------------------------
// Level sets and their closures in Y
// ---------------------------------------------------------------------------

struct ClosedInterval {
  Rational lo;
  Rational hi;  // lo == hi for an isolated point

  bool operator==(const ClosedInterval&) const = default;
};

/// Finite union of closed intervals and points; components sorted, disjoint
/// and maximal.
class IntervalRegion {
 public:
  IntervalRegion() = default;
  static IntervalRegion from_parts(std::vector<ClosedInterval> parts);

  std::span<const ClosedInterval> components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;
  IntervalRegion intersect(const IntervalRegion& other) const;
  /// Smallest element.
  std::optional<Rational> first() const;

  bool operator==(const IntervalRegion&) const = default;

 private:
  std::vector<ClosedInterval> parts_;
};

/// Subset of ℕ ∪ {∞}: an eventually periodic membership pattern on ℕ plus a
/// flag for ∞.
class IndexRegion {
 public:
  IndexRegion(SeqFunction indicator, bool infinity);

  bool contains(std::uint64_t n) const { return indicator_.at(n).sign() != 0; }
  bool contains_infinity() const { return infinity_; }
  /// Infinitely many members in ℕ.
  bool unbounded() const;
  bool empty() const;
  IndexRegion intersect(const IndexRegion& other) const;
  /// Smallest member of ℕ, if any.
  std::optional<std::uint64_t> first_index() const;
  const SeqFunction& indicator() const { return indicator_; }

  bool operator==(const IndexRegion&) const = default;

 private:
  SeqFunction indicator_;
  bool infinity_;
};

/// cl_Y {x ∈ X : f(x) >= η}. Requires f usc on X.
IntervalRegion superlevel_closure(const PuncturedFunction& f, const Rational& eta);
/// cl_Y {x ∈ X : g(x) <= λ}. Requires g lsc on X.
IntervalRegion sublevel_closure(const PuncturedFunction& g, const Rational& lambda);
/// Level sets in ℕ; ∞ is added when the set is infinite.
IndexRegion superlevel_closure(const SeqFunction& f, const Rational& eta);
IndexRegion sublevel_closure(const SeqFunction& g, const Rational& lambda);

// ---------------------------------------------------------------------------
// Obstructions and the end-to-end pipeline
// ---------------------------------------------------------------------------

/// A point of ℕ ∪ {∞}; an empty index means ∞.
struct SequencePoint {
  std::optional<std::uint64_t> index;

  bool is_infinity() const { return !index.has_value(); }
  bool operator==(const SequencePoint&) const = default;
};

using ModelPoint = std::variant<Rational, SequencePoint>;

/// y lies in both cl_Y f^{-1}[η, ∞) and cl_Y g^{-1}(-∞, λ] with η > λ, so no
/// extension pair can satisfy U(f)(y) <= L(g)(y).
struct Obstruction {
  ModelPoint y;
  Rational eta;
  Rational lambda;
};

/// Returns the smallest point of the intersection of the two closures, or
/// nothing when they are disjoint. Throws ParameterError unless η > λ and
/// PreconditionError when f is not usc, g not lsc, or f <= g fails on X.
std::optional<Obstruction> check_obstruction(const PuncturedFunction& f,
                                             const PuncturedFunction& g, const Rational& eta,
                                             const Rational& lambda);
std::optional<Obstruction> check_obstruction(const SeqFunction& f, const SeqFunction& g,
                                             const Rational& eta, const Rational& lambda);

/// Levels η > λ strictly between lower < upper, taken as midpoints between
/// adjacent entries of `values` restricted to [lower, upper]; quarter points
/// when no value lies strictly inside.
std::pair<Rational, Rational> straddling_levels(const Rational& upper, const Rational& lower,
                                                std::vector<Rational> values);

struct PipelineSuccess {
  PuncturedFunction h;
  PLFunction upper_extension;  // F = U(f)
  PLFunction lower_extension;  // G = L(g)
  InsertionResult insertion;   // kt_compact(F, G, tol)
};

using PipelineResult = std::variant<PipelineSuccess, Obstruction>;

/// Extends f, g to Y, checks F <= G exactly, inserts on Y and restricts.
/// When F <= G fails, returns the obstruction at the violating point.
PipelineResult kt_pipeline(const PuncturedFunction& f, const PuncturedFunction& g,
                           const Rational& tol, const ScheduleOptions& options = {});

}  // namespace sandwich
