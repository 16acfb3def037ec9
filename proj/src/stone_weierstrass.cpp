#include "sandwich/stone_weierstrass.hpp"

#include "sandwich/condition_c.hpp"

namespace sandwich {
namespace {

std::optional<std::size_t> separating_generator(std::span<const FiniteFunction> gens,
                                                std::size_t x, std::size_t y) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i][x] != gens[i][y]) return i;
  }
  return std::nullopt;
}

}  // namespace

SeparationCheck separates(std::span<const FiniteFunction> gens) {
  if (gens.empty()) throw ParameterError("no generators given");
  return separates(gens, gens.front().size());
}

SeparationCheck separates(std::span<const FiniteFunction> gens, std::size_t size) {
  if (size == 0) throw ParameterError("space must have at least one point");
  for (const FiniteFunction& g : gens) {
    if (g.size() != size) throw ParameterError("generator size mismatch");
  }
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = x + 1; y < size; ++y) {
      if (!separating_generator(gens, x, y)) return {false, std::pair{x, y}};
    }
  }
  return {};
}

LatticeExpr interpolate_pair(std::span<const FiniteFunction> gens, std::size_t x, std::size_t y,
                             const Rational& alpha, const Rational& beta) {
  if (x == y) throw ParameterError("interpolation points must differ");
  if (alpha == beta) return LatticeExpr::constant(alpha);
  const auto u = separating_generator(gens, x, y);
  if (!u) throw SeparationError(x, y);
  const FiniteFunction& g = gens[*u];
  const Rational slope = (beta - alpha) / (g[y] - g[x]);
  return LatticeExpr::constant(alpha - slope * g[x]) + slope * LatticeExpr::generator(*u);
}

LatticeExpr sw_construct(std::span<const FiniteFunction> gens, const FiniteFunction& h) {
  const std::size_t n = h.size();
  if (const auto sep = separates(gens, n); !sep) {
    throw SeparationError(sep.pair->first, sep.pair->second);
  }
  if (n == 1) return LatticeExpr::constant(h[0]);

  std::optional<LatticeExpr> outer;
  for (std::size_t x = 0; x < n; ++x) {
    // m_x <= h everywhere and m_x(x) = h(x).
    std::optional<LatticeExpr> inner;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      LatticeExpr e = interpolate_pair(gens, x, y, h[x], h[y]);
      inner = inner ? meet(*inner, e) : e;
    }
    outer = outer ? join(*outer, *inner) : *inner;
  }
  if (evaluate(*outer, gens, n) != h) {
    throw InternalError("Stone-Weierstrass construction does not reproduce the target");
  }
  return *outer;
}

ClopenApproximation clopen_approx(const FiniteFunction& h, std::span<const LatticeExpr> S,
                                  std::span<const LatticeExpr> T, const Rational& epsilon,
                                  std::span<const FiniteFunction> gens,
                                  const EvalOptions& options) {
  if (epsilon.sign() <= 0) throw ParameterError("ε must be positive, got " + epsilon.str());
  if (S.empty() || T.empty()) throw ParameterError("witness families must be nonempty");
  const std::size_t n = h.size();
  std::vector<FiniteFunction> s_values, t_values;
  for (const LatticeExpr& e : S) s_values.push_back(evaluate(e, gens, n, options));
  for (const LatticeExpr& e : T) t_values.push_back(evaluate(e, gens, n, options));

  const Rational half = epsilon / Rational(2);
  FiniteFunction lower = s_values.front();
  for (const FiniteFunction& s : s_values) lower = meet(lower, s);
  FiniteFunction upper = t_values.front();
  for (const FiniteFunction& t : t_values) upper = join(upper, t);
  if (lower != h + half) throw PreconditionError("⋀S differs from h + ε/2");
  if (upper != h + epsilon) throw PreconditionError("⋁T differs from h + ε");

  ExtractionResult ex = extract_finite(std::span<const FiniteFunction>(s_values),
                                       std::span<const FiniteFunction>(t_values), half);
  LatticeExpr a = S[ex.s_indices.front()];
  FiniteFunction a_values = s_values[ex.s_indices.front()];
  for (std::size_t k = 1; k < ex.s_indices.size(); ++k) {
    a = meet(a, S[ex.s_indices[k]]);
    a_values = meet(a_values, s_values[ex.s_indices[k]]);
  }
  if (!compare_le(h + half, a_values) || !compare_le(a_values, h + epsilon) ||
      evaluate(a, gens, n, options) != a_values) {
    throw InternalError("clopen approximation violates h + ε/2 <= a <= h + ε");
  }
  return {std::move(a), std::move(ex.s_indices), std::move(ex.t_indices)};
}

}  // namespace sandwich
