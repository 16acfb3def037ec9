#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sandwich/error.hpp"
#include "sandwich/finite_function.hpp"
#include "sandwich/lattice_expr.hpp"

namespace sandwich {

/// No generator distinguishes the two points.
class SeparationError : public PreconditionError {
 public:
  SeparationError(std::size_t x, std::size_t y)
      : PreconditionError("generators do not separate points " + std::to_string(x) + " and " +
                          std::to_string(y)),
        pair_(x, y) {}

  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

struct SeparationCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> pair;

  explicit operator bool() const { return holds; }
};

/// Whether for every x != y of the n-point space some generator differs.
/// Throws ParameterError for an empty list, n = 0, or mismatched sizes.
SeparationCheck separates(std::span<const FiniteFunction> gens);
/// Same with an explicit space size (allows an empty generator list).
SeparationCheck separates(std::span<const FiniteFunction> gens, std::size_t size);

/// α + (β - α)(u - u(x)) / (u(y) - u(x)) for the first generator u with
/// u(x) != u(y); only constants, sums and scalar multiples are used.
LatticeExpr interpolate_pair(std::span<const FiniteFunction> gens, std::size_t x, std::size_t y,
                             const Rational& alpha, const Rational& beta);

/// ⋁_x ⋀_{y != x} interpolate_pair(x, y, h(x), h(y)), checked to evaluate to h.
LatticeExpr sw_construct(std::span<const FiniteFunction> gens, const FiniteFunction& h);

struct ClopenApproximation {
  LatticeExpr a;  // ⋀S_0
  std::vector<std::size_t> s_indices;
  std::vector<std::size_t> t_indices;
};

/// Given witnesses ⋀S = h + ε/2 and ⋁T = h + ε, extracts finite S_0, T_0 and
/// returns a = ⋀S_0 with h + ε/2 <= a <= h + ε, hence ‖a - h‖ <= ε.
/// Throws PreconditionError when the witness identities fail.
ClopenApproximation clopen_approx(const FiniteFunction& h, std::span<const LatticeExpr> S,
                                  std::span<const LatticeExpr> T, const Rational& epsilon,
                                  std::span<const FiniteFunction> gens,
                                  const EvalOptions& options = {});

}  // namespace sandwich
