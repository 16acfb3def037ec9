#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sandwich/finite_function.hpp"
#include "sandwich/lattice_expr.hpp"
#include "sandwich/pl_function.hpp"

namespace testsupport {

using sandwich::Breakpoint;
using sandwich::FiniteFunction;
using sandwich::LatticeExpr;
using sandwich::PLFunction;
using sandwich::Rational;

/// Evaluates breakpoint records by a linear scan, without PLFunction::eval.
Rational eval_records(std::span<const Breakpoint> pts, const Rational& x);

/// Probe abscissa i/n.
inline Rational probe(std::int64_t i, std::int64_t n) { return Rational(i, n); }

/// Brute-force Pasch-Hausdorff envelopes on the grid {k/n}. Values are
/// integers scaled by n, so |x - y| * lambda * n = lambda * |i - k| exactly.
std::vector<std::int64_t> brute_upper_envelope(std::span<const std::int64_t> scaled, std::int64_t lambda);
std::vector<std::int64_t> brute_lower_envelope(std::span<const std::int64_t> scaled, std::int64_t lambda);

/// Recursive evaluation of an expression at one point, using only the tree
/// accessors (no sandwich::evaluate).
Rational eval_tree(const LatticeExpr& e, std::span<const FiniteFunction> gens, std::size_t point);

/// Samples the tree at every point of an n-point space.
FiniteFunction eval_tree_all(const LatticeExpr& e, std::span<const FiniteFunction> gens, std::size_t n);

/// The union of both breakpoint sets plus two interior points between each
/// consecutive pair: enough to decide pointwise equality of two PL functions
/// on a shared domain.
std::vector<Rational> decisive_points(const PLFunction& f, const PLFunction& g);

}  // namespace testsupport
