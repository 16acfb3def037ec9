#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sandwich/error.hpp"
#include "sandwich/pl_function.hpp"
#include "sandwich/rational.hpp"

namespace sandwich {

/// Result of a semicontinuity test. On failure, `x` is the first offending
/// breakpoint and `deficit` the size of the gap between the point value and
/// the relevant one-sided limit.
struct SemicontinuityCheck {
  bool holds = true;
  std::optional<Rational> x;
  std::optional<Rational> deficit;

  explicit operator bool() const { return holds; }
};

/// Thrown when an operation needs a usc (or lsc) input and did not get one.
class SemicontinuityViolation : public PreconditionError {
 public:
  SemicontinuityViolation(const std::string& what, Rational x, Rational deficit)
      : PreconditionError(what), x_(std::move(x)), deficit_(std::move(deficit)) {}

  const Rational& x() const { return x_; }
  const Rational& deficit() const { return deficit_; }

 private:
  Rational x_;
  Rational deficit_;
};

/// v_i >= max(adjacent limits) at every breakpoint (inward limit only at the ends).
SemicontinuityCheck is_usc(const PLFunction& f);
/// v_i <= min(adjacent limits) at every breakpoint.
SemicontinuityCheck is_lsc(const PLFunction& g);

/// Raises each point value to the max of itself and its limits.
PLFunction usc_envelope(const PLFunction& f);
/// Lowers each point value to the min of itself and its limits.
PLFunction lsc_envelope(const PLFunction& g);

/// f^λ(x) = sup over the closed graph of f of q - λ|x - p|.
///
/// The result is continuous, λ-Lipschitz, lies above f, and decreases as λ
/// grows; for usc f it converges pointwise down to f. Throws ParameterError
/// unless λ > 0.
PLFunction upper_lipschitz(const PLFunction& f, const Rational& lambda);

/// g_λ(x) = inf over the closed graph of g of q + λ|x - p|; the dual of
/// upper_lipschitz, increasing in λ towards g when g is lsc.
PLFunction lower_lipschitz(const PLFunction& g, const Rational& lambda);

/// Doubling schedule λ_j = initial · 2^j, capped at `cap`.
struct LambdaSchedule {
  Rational initial{1};
  Rational cap = Rational::pow2(40);

  Rational at(std::size_t j) const;
  /// Number of schedule values not exceeding the cap.
  std::size_t length() const;
};

/// Overrides for the default schedule; `initial` defaults to max(1, max |slope|).
struct ScheduleOptions {
  std::optional<Rational> initial;
  Rational cap = Rational::pow2(40);
};

/// max(1, largest absolute piece slope over all inputs).
Rational default_initial_lambda(std::span<const PLFunction> fs);

LambdaSchedule make_schedule(std::span<const PLFunction> fs, const ScheduleOptions& options);

enum class EnvelopeDirection { upper, lower };

/// Lazily enumerated monotone chain of Lipschitz envelopes of one function:
/// decreasing f^{λ_j} (upper) or increasing g_{λ_j} (lower).
class LipschitzFamily {
 public:
  LipschitzFamily(PLFunction base, EnvelopeDirection direction, LambdaSchedule schedule);

  const PLFunction& base() const { return base_; }
  EnvelopeDirection direction() const { return direction_; }
  const LambdaSchedule& schedule() const { return schedule_; }

  std::size_t size() const { return schedule_.length(); }
  Rational lambda(std::size_t j) const { return schedule_.at(j); }
  PLFunction member(std::size_t j) const;

 private:
  PLFunction base_;
  EnvelopeDirection direction_;
  LambdaSchedule schedule_;
};

struct DilworthWitness {
  Rational lambda;
  std::size_t schedule_index = 0;
};

/// All breakpoints of f plus the midpoint of every piece.
std::vector<Rational> default_samples(const PLFunction& f);

/// First schedule value λ* with f^{λ*}(x) <= f(x) + δ at every sample x.
///
/// Throws SemicontinuityViolation (carrying the first non-usc breakpoint and
/// its deficit usc_envelope(f) - f) when f is not usc, ParameterError for
/// δ <= 0 or samples outside the domain, and InternalError if the cap is hit.
DilworthWitness dilworth_witness(const PLFunction& f, std::span<const Rational> samples,
                                 const Rational& delta, const ScheduleOptions& options = {});

}  // namespace sandwich
