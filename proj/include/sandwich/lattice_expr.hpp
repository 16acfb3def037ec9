#pragma once

#include <memory>
#include <span>
#include <string>

#include "sandwich/finite_function.hpp"
#include "sandwich/rational.hpp"

namespace sandwich {

/// Immutable expression tree over generator leaves and rational constants
/// with +, scalar multiples, ∨, ∧ and (optionally) pointwise products.
///
/// Subtrees are shared, so copies are cheap.
class LatticeExpr {
 public:
  enum class Kind { generator, constant, sum, scale, join, meet, product };

  static LatticeExpr generator(std::size_t index);
  static LatticeExpr constant(const Rational& c);

  friend LatticeExpr operator+(const LatticeExpr& a, const LatticeExpr& b);
  friend LatticeExpr operator*(const Rational& c, const LatticeExpr& a);
  friend LatticeExpr join(const LatticeExpr& a, const LatticeExpr& b);
  friend LatticeExpr meet(const LatticeExpr& a, const LatticeExpr& b);
  friend LatticeExpr product(const LatticeExpr& a, const LatticeExpr& b);

  Kind kind() const;
  /// Generator index (generator nodes only).
  std::size_t index() const;
  /// Constant value or scale factor (constant and scale nodes only).
  const Rational& scalar() const;
  /// Child subtrees: 0 for leaves, 1 for scale, 2 for binary nodes.
  const LatticeExpr& lhs() const;
  const LatticeExpr& rhs() const;

  bool uses_lattice_ops() const;
  bool uses_product() const;
  std::size_t node_count() const;

  /// Infix rendering, e.g. "((1/2 + 3*g0) v g1)".
  std::string str() const;

 private:
  struct Node;
  explicit LatticeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct EvalOptions {
  /// Products are outside the vector-sublattice fragment and disabled by default.
  bool allow_product = false;
};

/// Evaluates on a finite space of `size` points. Throws ParameterError for
/// out-of-range generators, size mismatches, or a disabled product node.
FiniteFunction evaluate(const LatticeExpr& e, std::span<const FiniteFunction> gens,
                        std::size_t size, const EvalOptions& options = {});

}  // namespace sandwich
