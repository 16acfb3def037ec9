#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace testsupport {

Rational eval_records(std::span<const Breakpoint> pts, const Rational& x) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x == x) return pts[i].value;
    if (i + 1 < pts.size() && pts[i].x < x && x < pts[i + 1].x) {
      const Rational t = (x - pts[i].x) / (pts[i + 1].x - pts[i].x);
      return pts[i].right + t * (pts[i + 1].left - pts[i].right);
    }
  }
  throw std::out_of_range("probe outside the records");
}

std::vector<std::int64_t> brute_upper_envelope(std::span<const std::int64_t> scaled, std::int64_t lambda) {
  const std::int64_t n = static_cast<std::int64_t>(scaled.size());
  std::vector<std::int64_t> out(scaled.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t best = scaled[0] - lambda * i;
    for (std::int64_t k = 1; k < n; ++k) best = std::max(best, scaled[k] - lambda * std::abs(i - k));
    out[i] = best;
  }
  return out;
}

std::vector<std::int64_t> brute_lower_envelope(std::span<const std::int64_t> scaled, std::int64_t lambda) {
  const std::int64_t n = static_cast<std::int64_t>(scaled.size());
  std::vector<std::int64_t> out(scaled.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t best = scaled[0] + lambda * i;
    for (std::int64_t k = 1; k < n; ++k) best = std::min(best, scaled[k] + lambda * std::abs(i - k));
    out[i] = best;
  }
  return out;
}

Rational eval_tree(const LatticeExpr& e, std::span<const FiniteFunction> gens, std::size_t point) {
  using K = LatticeExpr::Kind;
  switch (e.kind()) {
    case K::generator: return gens[e.index()][point];
    case K::constant: return e.scalar();
    case K::scale: return e.scalar() * eval_tree(e.lhs(), gens, point);
    case K::sum: return eval_tree(e.lhs(), gens, point) + eval_tree(e.rhs(), gens, point);
    case K::join: return sandwich::max(eval_tree(e.lhs(), gens, point), eval_tree(e.rhs(), gens, point));
    case K::meet: return sandwich::min(eval_tree(e.lhs(), gens, point), eval_tree(e.rhs(), gens, point));
    case K::product: return eval_tree(e.lhs(), gens, point) * eval_tree(e.rhs(), gens, point);
  }
  throw std::logic_error("unknown node");
}

FiniteFunction eval_tree_all(const LatticeExpr& e, std::span<const FiniteFunction> gens, std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t p = 0; p < n; ++p) v.push_back(eval_tree(e, gens, p));
  return FiniteFunction(std::move(v));
}

std::vector<Rational> decisive_points(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> xs;
  for (const Breakpoint& p : f.breakpoints()) xs.push_back(p.x);
  for (const Breakpoint& p : g.breakpoints()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    // Two interior points per piece pin down an affine piece and its limits.
    xs.push_back(xs[i] + (xs[i + 1] - xs[i]) / Rational(3));
    xs.push_back(xs[i] + Rational(2) * (xs[i + 1] - xs[i]) / Rational(3));
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace testsupport
