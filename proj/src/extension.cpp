#include "sandwich/extension.hpp"

#include <algorithm>

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

bool contains_sorted(std::span<const Rational> xs, const Rational& x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

SemicontinuityCheck check_on_subspace(const PLFunction& carrier, std::span<const Rational> removed,
                                      bool upper) {
  auto pts = carrier.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Breakpoint& p = pts[i];
    if (contains_sorted(removed, p.x)) continue;
    Rational low = i == 0 ? p.right : p.left;
    Rational high = low;
    if (i > 0 && i + 1 < pts.size()) {
      low = min(p.left, p.right);
      high = max(p.left, p.right);
    }
    if (upper && p.value < high) return {false, p.x, high - p.value};
    if (!upper && low < p.value) return {false, p.x, p.value - low};
  }
  return {};
}

void require_same_model(const PuncturedFunction& f, const PuncturedFunction& g) {
  if (!(f.model() == g.model())) throw DomainError("functions live on different subspaces");
}

void require_usc(const PuncturedFunction& f) {
  if (const auto c = is_usc(f); !c) {
    throw SemicontinuityViolation("not usc on X at x = " + c.x->str(), *c.x, *c.deficit);
  }
}

void require_lsc(const PuncturedFunction& g) {
  if (const auto c = is_lsc(g); !c) {
    throw SemicontinuityViolation("not lsc on X at x = " + c.x->str(), *c.x, *c.deficit);
  }
}

PLFunction fill_removed(const PuncturedFunction& f, bool upper) {
  PLFunction out = f.carrier();
  for (const Rational& d : f.removed()) {
    const Rational l = out.left_limit(d);
    const Rational r = out.right_limit(d);
    out = out.with_value(d, upper ? max(l, r) : min(l, r));
  }
  return out;
}

// cl_Y {x ∈ X : carrier(x) >= eta}; values at removed points are skipped.
IntervalRegion level_closure(const PLFunction& carrier, std::span<const Rational> removed,
                             const Rational& eta) {
  auto pts = carrier.breakpoints();
  std::vector<ClosedInterval> parts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Breakpoint& p = pts[i];
    if (!contains_sorted(removed, p.x) && p.value >= eta) parts.push_back({p.x, p.x});
    if (i + 1 == pts.size()) break;
    const Breakpoint& q = pts[i + 1];
    const Rational& a = p.right;
    const Rational& b = q.left;
    if (a >= eta && b >= eta) {
      parts.push_back({p.x, q.x});
    } else if (a >= eta || b >= eta) {
      const Rational c = p.x + (q.x - p.x) * ((a - eta) / (a - b));
      // The closure of (p.x, c] or [c, q.x) is nonempty unless it degenerates.
      if (a >= eta && p.x < c) parts.push_back({p.x, c});
      if (b >= eta && c < q.x) parts.push_back({c, q.x});
    }
  }
  return IntervalRegion::from_parts(std::move(parts));
}

SeqFunction indicator_of(const SeqFunction& f, const Rational& eta, bool upper) {
  auto in = [&](const Rational& v) { return Rational(upper ? (v >= eta) : (v <= eta)); };
  std::vector<Rational> prefix, period;
  for (const Rational& v : f.prefix()) prefix.push_back(in(v));
  for (const Rational& v : f.period()) period.push_back(in(v));
  return SeqFunction::make(std::move(prefix), std::move(period));
}

}  // namespace

// ---------------------------------------------------------------------------

PuncturedFunction PuncturedFunction::make(const PLFunction& carrier, std::vector<Rational> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  PLFunction normalized = carrier;
  for (const Rational& d : removed) {
    if (!(carrier.lo() < d && d < carrier.hi())) {
      throw DomainError("removed point " + d.str() + " not strictly inside the domain");
    }
    normalized = normalized.with_value(
        d, max(normalized.left_limit(d), normalized.right_limit(d)));
  }
  return PuncturedFunction(std::move(normalized), std::move(removed));
}

bool PuncturedFunction::is_removed(const Rational& x) const { return contains_sorted(removed_, x); }

Rational PuncturedFunction::eval(const Rational& x) const {
  if (is_removed(x)) throw DomainError("x = " + x.str() + " is not a point of X");
  return carrier_.eval(x);
}

SemicontinuityCheck is_usc(const PuncturedFunction& f) {
  return check_on_subspace(f.carrier(), f.removed(), true);
}

SemicontinuityCheck is_lsc(const PuncturedFunction& g) {
  return check_on_subspace(g.carrier(), g.removed(), false);
}

Comparison compare_le(const PuncturedFunction& f, const PuncturedFunction& g) {
  require_same_model(f, g);
  // Give removed points a value that cannot fail so only X is compared.
  PLFunction lower = f.carrier();
  for (const Rational& d : f.removed()) lower = lower.with_value(d, g.carrier()(d));
  return compare_le(lower, g.carrier());
}

bool restricts_to(const PLFunction& F, const PuncturedFunction& f) {
  if (!F.same_domain(f.carrier())) return false;
  const PLFunction diff = F - f.carrier();
  auto pts = diff.breakpoints();
  return std::all_of(pts.begin(), pts.end(), [&](const Breakpoint& p) {
    return p.left.is_zero() && p.right.is_zero() && (f.is_removed(p.x) || p.value.is_zero());
  });
}

bool is_usc(const SeqFunction& F) {
  return !F.infinity_value() || F.limsup() <= *F.infinity_value();
}

bool is_lsc(const SeqFunction& F) {
  return !F.infinity_value() || *F.infinity_value() <= F.liminf();
}

Comparison compare_le(const SeqFunction& f, const SeqFunction& g) {
  const std::size_t horizon = std::max(f.prefix().size(), g.prefix().size()) +
                              std::lcm(f.period().size(), g.period().size());
  for (std::size_t n = 0; n < horizon; ++n) {
    if (g.at(n) < f.at(n)) return {false, Rational(static_cast<long long>(n))};
  }
  if (f.infinity_value() && g.infinity_value() && *g.infinity_value() < *f.infinity_value()) {
    return {false, Rational(-1)};
  }
  return {};
}

// ---------------------------------------------------------------------------

PLFunction extend_upper(const PuncturedFunction& f) {
  require_usc(f);
  PLFunction F = fill_removed(f, true);
  if (!restricts_to(F, f) || !is_usc(F)) throw InternalError("U(f) postcondition failed");
  return F;
}

PLFunction extend_lower(const PuncturedFunction& g) {
  require_lsc(g);
  PLFunction G = fill_removed(g, false);
  if (!restricts_to(G, g) || !is_lsc(G)) throw InternalError("L(g) postcondition failed");
  return G;
}

SeqFunction extend_upper(const SeqFunction& f) {
  if (f.defined_at_infinity()) throw ParameterError("function is already defined at ∞");
  return f.with_infinity(f.limsup());
}

SeqFunction extend_lower(const SeqFunction& g) {
  if (g.defined_at_infinity()) throw ParameterError("function is already defined at ∞");
  return g.with_infinity(g.liminf());
}

std::pair<PLFunction, PLFunction> usc_extension_nonunique_demo(const PuncturedFunction& f) {
  if (f.removed().empty()) throw PreconditionError("X = Y: no points to extend to");
  PLFunction U = extend_upper(f);
  PLFunction bumped = U;
  for (const Rational& d : f.removed()) bumped = bumped.with_value(d, U(d) + Rational(1));
  if (!is_usc(bumped) || !restricts_to(bumped, f) || bumped == U) {
    throw InternalError("second usc extension failed its postconditions");
  }
  return {std::move(U), std::move(bumped)};
}

std::pair<SeqFunction, SeqFunction> usc_extension_nonunique_demo(const SeqFunction& f) {
  SeqFunction U = extend_upper(f);
  SeqFunction bumped = U.with_infinity(*U.infinity_value() + Rational(1));
  return {std::move(U), std::move(bumped)};
}

// ---------------------------------------------------------------------------

IntervalRegion IntervalRegion::from_parts(std::vector<ClosedInterval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
  IntervalRegion r;
  for (ClosedInterval& c : parts) {
    if (!r.parts_.empty() && c.lo <= r.parts_.back().hi) {
      r.parts_.back().hi = max(r.parts_.back().hi, c.hi);
    } else {
      r.parts_.push_back(std::move(c));
    }
  }
  return r;
}

bool IntervalRegion::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const ClosedInterval& c) { return c.lo <= x && x <= c.hi; });
}

IntervalRegion IntervalRegion::intersect(const IntervalRegion& other) const {
  std::vector<ClosedInterval> out;
  for (const ClosedInterval& a : parts_) {
    for (const ClosedInterval& b : other.parts_) {
      const Rational& lo = max(a.lo, b.lo);
      const Rational& hi = min(a.hi, b.hi);
      if (lo <= hi) out.push_back({lo, hi});
    }
  }
  return from_parts(std::move(out));
}

std::optional<Rational> IntervalRegion::first() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().lo;
}

IndexRegion::IndexRegion(SeqFunction indicator, bool infinity)
    : indicator_(std::move(indicator)), infinity_(infinity) {}

bool IndexRegion::unbounded() const {
  auto p = indicator_.period();
  return std::any_of(p.begin(), p.end(), [](const Rational& v) { return v.sign() != 0; });
}

bool IndexRegion::empty() const { return !infinity_ && !first_index(); }

IndexRegion IndexRegion::intersect(const IndexRegion& other) const {
  return IndexRegion(zip_with(indicator_, other.indicator_,
                              [](const Rational& a, const Rational& b) { return min(a, b); }),
                     infinity_ && other.infinity_);
}

std::optional<std::uint64_t> IndexRegion::first_index() const {
  const std::size_t horizon = indicator_.prefix().size() + indicator_.period().size();
  for (std::size_t n = 0; n < horizon; ++n) {
    if (contains(n)) return n;
  }
  return std::nullopt;
}

IntervalRegion superlevel_closure(const PuncturedFunction& f, const Rational& eta) {
  require_usc(f);
  return level_closure(f.carrier(), f.removed(), eta);
}

IntervalRegion sublevel_closure(const PuncturedFunction& g, const Rational& lambda) {
  require_lsc(g);
  return level_closure(-g.carrier(), g.removed(), -lambda);
}

IndexRegion superlevel_closure(const SeqFunction& f, const Rational& eta) {
  SeqFunction ind = indicator_of(f, eta, true);
  IndexRegion r(ind, false);
  return IndexRegion(std::move(ind), r.unbounded());
}

IndexRegion sublevel_closure(const SeqFunction& g, const Rational& lambda) {
  SeqFunction ind = indicator_of(g, lambda, false);
  IndexRegion r(ind, false);
  return IndexRegion(std::move(ind), r.unbounded());
}

// ---------------------------------------------------------------------------

std::optional<Obstruction> check_obstruction(const PuncturedFunction& f,
                                             const PuncturedFunction& g, const Rational& eta,
                                             const Rational& lambda) {
  if (!(lambda < eta)) {
    throw ParameterError("levels must satisfy η > λ, got η = " + eta.str() + ", λ = " + lambda.str());
  }
  require_usc(f);
  require_lsc(g);
  if (const auto c = compare_le(f, g); !c) {
    throw PreconditionError("f <= g fails on X at x = " + c.witness->str());
  }
  const IntervalRegion both = superlevel_closure(f, eta).intersect(sublevel_closure(g, lambda));
  if (both.empty()) return std::nullopt;
  return Obstruction{*both.first(), eta, lambda};
}

std::optional<Obstruction> check_obstruction(const SeqFunction& f, const SeqFunction& g,
                                             const Rational& eta, const Rational& lambda) {
  if (!(lambda < eta)) {
    throw ParameterError("levels must satisfy η > λ, got η = " + eta.str() + ", λ = " + lambda.str());
  }
  const SeqFunction fx = f.restricted_to_naturals();
  const SeqFunction gx = g.restricted_to_naturals();
  if (const auto c = compare_le(fx, gx); !c) {
    throw PreconditionError("f <= g fails at n = " + c.witness->str());
  }
  const IndexRegion both = superlevel_closure(fx, eta).intersect(sublevel_closure(gx, lambda));
  if (const auto n = both.first_index()) return Obstruction{SequencePoint{*n}, eta, lambda};
  if (both.contains_infinity()) return Obstruction{SequencePoint{}, eta, lambda};
  return std::nullopt;
}

std::pair<Rational, Rational> straddling_levels(const Rational& upper, const Rational& lower,
                                                std::vector<Rational> values) {
  if (!(lower < upper)) throw ParameterError("straddling levels need lower < upper");
  values.push_back(upper);
  values.push_back(lower);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::erase_if(values, [&](const Rational& v) { return v < lower || upper < v; });
  if (values.size() == 2) {
    const Rational mid = midpoint(lower, upper);
    return {midpoint(mid, upper), midpoint(lower, mid)};
  }
  return {midpoint(values[values.size() - 2], values.back()), midpoint(values[0], values[1])};
}

PipelineResult kt_pipeline(const PuncturedFunction& f, const PuncturedFunction& g,
                           const Rational& tol, const ScheduleOptions& options) {
  require_same_model(f, g);
  require_usc(f);
  require_lsc(g);
  if (const auto c = compare_le(f, g); !c) {
    throw PreconditionError("f <= g fails on X at x = " + c.witness->str());
  }
  PLFunction F = extend_upper(f);
  PLFunction G = extend_lower(g);
  if (const auto order = compare_le(F, G); !order) {
    const Rational& y = *order.witness;
    const auto [eta, lambda] = straddling_levels(
        F(y), G(y), {F.left_limit(y), F.right_limit(y), G.left_limit(y), G.right_limit(y)});
    const bool in_both = superlevel_closure(f, eta).contains(y) &&
                         sublevel_closure(g, lambda).contains(y);
    if (!in_both) throw InternalError("F <= G fails at " + y.str() + " without an obstruction");
    return Obstruction{y, eta, lambda};
  }
  InsertionResult inserted = kt_compact(F, G, tol, options);
  PuncturedFunction h = PuncturedFunction::make(inserted.h, std::vector<Rational>(
                                                              f.removed().begin(), f.removed().end()));
  const PLFunction shifted = f.carrier() - tol;
  if (!compare_le(PuncturedFunction::make(shifted, h.model().removed), h) || !compare_le(h, g)) {
    throw InternalError("restricted insertion violates f - tol <= h <= g");
  }
  return PipelineSuccess{std::move(h), std::move(F), std::move(G), std::move(inserted)};
}

}  // namespace sandwich
