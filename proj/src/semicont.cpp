#include "sandwich/semicont.hpp"

#include <algorithm>

namespace sandwich {
namespace {

// Upper and lower bounds of the one-sided limits that matter at breakpoint i.
struct LimitRange {
  Rational low;
  Rational high;
};

LimitRange limit_range(std::span<const Breakpoint> pts, std::size_t i) {
  const Breakpoint& p = pts[i];
  if (i == 0) return {p.right, p.right};
  if (i + 1 == pts.size()) return {p.left, p.left};
  return {min(p.left, p.right), max(p.left, p.right)};
}

PLFunction cone(const Rational& lo, const Rational& hi, const Rational& center,
                const Rational& height, const Rational& lambda) {
  std::vector<Breakpoint> pts;
  auto add = [&](const Rational& x) {
    const Rational y = height - lambda * abs(x - center);
    pts.push_back({x, y, y, y});
  };
  add(lo);
  if (lo < center && center < hi) add(center);
  add(hi);
  return PLFunction::from_breakpoints(std::move(pts));
}

// sup over p in [a, b] of h(p) - λ|x - p| for an affine h with |slope| <= λ:
// h itself on [a, b], continued by λ-cones outside.
PLFunction ramp(const Rational& lo, const Rational& hi, const Rational& a, const Rational& ya,
                const Rational& b, const Rational& yb, const Rational& lambda) {
  std::vector<Breakpoint> pts;
  auto add = [&](const Rational& x, const Rational& y) { pts.push_back({x, y, y, y}); };
  if (lo < a) add(lo, ya - lambda * (a - lo));
  add(a, ya);
  add(b, yb);
  if (b < hi) add(hi, yb - lambda * (hi - b));
  return PLFunction::from_breakpoints(std::move(pts));
}

}  // namespace

SemicontinuityCheck is_usc(const PLFunction& f) {
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational& high = limit_range(pts, i).high;
    if (pts[i].value < high) return {false, pts[i].x, high - pts[i].value};
  }
  return {};
}

SemicontinuityCheck is_lsc(const PLFunction& g) {
  auto pts = g.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational& low = limit_range(pts, i).low;
    if (low < pts[i].value) return {false, pts[i].x, pts[i].value - low};
  }
  return {};
}

PLFunction usc_envelope(const PLFunction& f) {
  auto pts = f.breakpoints();
  std::vector<Breakpoint> out(pts.begin(), pts.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].value = max(out[i].value, limit_range(pts, i).high);
  }
  return PLFunction::from_breakpoints(std::move(out));
}

PLFunction lsc_envelope(const PLFunction& g) {
  auto pts = g.breakpoints();
  std::vector<Breakpoint> out(pts.begin(), pts.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].value = min(out[i].value, limit_range(pts, i).low);
  }
  return PLFunction::from_breakpoints(std::move(out));
}

PLFunction upper_lipschitz(const PLFunction& f, const Rational& lambda) {
  if (lambda.sign() <= 0) throw ParameterError("Lipschitz constant must be positive, got " + lambda.str());
  auto pts = f.breakpoints();
  const Rational& lo = f.lo();
  const Rational& hi = f.hi();
  std::vector<PLFunction> sources;
  sources.reserve(2 * pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // Isolated point values above both limits are their own cone sources;
    // otherwise the adjacent closed segments dominate them.
    if (limit_range(pts, i).high < pts[i].value) {
      sources.push_back(cone(lo, hi, pts[i].x, pts[i].value, lambda));
    }
    if (i + 1 == pts.size()) break;
    const Breakpoint& p = pts[i];
    const Breakpoint& q = pts[i + 1];
    if (abs(f.slope(i)) <= lambda) {
      sources.push_back(ramp(lo, hi, p.x, p.right, q.x, q.left, lambda));
    } else {
      sources.push_back(cone(lo, hi, p.x, p.right, lambda));
      sources.push_back(cone(lo, hi, q.x, q.left, lambda));
    }
  }
  return join_all(sources);
}

PLFunction lower_lipschitz(const PLFunction& g, const Rational& lambda) {
  return -upper_lipschitz(-g, lambda);
}

Rational LambdaSchedule::at(std::size_t j) const {
  return initial * Rational::pow2(static_cast<int>(j));
}

std::size_t LambdaSchedule::length() const {
  std::size_t n = 0;
  for (Rational l = initial; l <= cap; l *= Rational(2)) ++n;
  return n;
}

Rational default_initial_lambda(std::span<const PLFunction> fs) {
  Rational best{1};
  for (const PLFunction& f : fs) best = max(best, f.max_abs_slope());
  return best;
}

LambdaSchedule make_schedule(std::span<const PLFunction> fs, const ScheduleOptions& options) {
  LambdaSchedule s;
  s.initial = options.initial ? *options.initial : default_initial_lambda(fs);
  if (s.initial.sign() <= 0) throw ParameterError("initial λ must be positive");
  s.cap = options.cap;
  return s;
}

LipschitzFamily::LipschitzFamily(PLFunction base, EnvelopeDirection direction,
                                 LambdaSchedule schedule)
    : base_(std::move(base)), direction_(direction), schedule_(std::move(schedule)) {}

PLFunction LipschitzFamily::member(std::size_t j) const {
  const Rational l = lambda(j);
  return direction_ == EnvelopeDirection::upper ? upper_lipschitz(base_, l)
                                                : lower_lipschitz(base_, l);
}

std::vector<Rational> default_samples(const PLFunction& f) {
  std::vector<Rational> out;
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i].x);
    if (i + 1 < pts.size()) out.push_back(midpoint(pts[i].x, pts[i + 1].x));
  }
  return out;
}

DilworthWitness dilworth_witness(const PLFunction& f, std::span<const Rational> samples,
                                 const Rational& delta, const ScheduleOptions& options) {
  if (delta.sign() <= 0) throw ParameterError("δ must be positive, got " + delta.str());
  for (const Rational& x : samples) {
    if (!f.contains(x)) throw ParameterError("sample " + x.str() + " outside the domain");
  }
  if (const auto check = is_usc(f); !check) {
    // inf_λ f^λ is the usc envelope, which exceeds f by the jump deficit here.
    throw SemicontinuityViolation("not upper semicontinuous at x = " + check.x->str() +
                                      " (deficit " + check.deficit->str() + ")",
                                  *check.x, *check.deficit);
  }
  const PLFunction family_base[] = {f};
  const LambdaSchedule schedule = make_schedule(family_base, options);
  std::vector<Rational> targets;
  targets.reserve(samples.size());
  for (const Rational& x : samples) targets.push_back(f(x) + delta);

  for (std::size_t j = 0; j < schedule.length(); ++j) {
    const Rational lambda = schedule.at(j);
    const PLFunction env = upper_lipschitz(f, lambda);
    bool ok = true;
    for (std::size_t s = 0; s < samples.size() && ok; ++s) ok = env(samples[s]) <= targets[s];
    if (ok) return {lambda, j};
  }
  throw InternalError("Lipschitz schedule cap " + schedule.cap.str() +
                      " exceeded for a usc input");
}

}  // namespace sandwich
