#include "sandwich/lattice_expr.hpp"

#include <optional>

#include "sandwich/error.hpp"

namespace sandwich {

struct LatticeExpr::Node {
  Kind kind;
  std::size_t index = 0;
  Rational scalar;
  std::optional<LatticeExpr> lhs;
  std::optional<LatticeExpr> rhs;
};

namespace {

std::string symbol(LatticeExpr::Kind k) {
  switch (k) {
    case LatticeExpr::Kind::sum: return " + ";
    case LatticeExpr::Kind::join: return " v ";
    case LatticeExpr::Kind::meet: return " ^ ";
    case LatticeExpr::Kind::product: return " * ";
    default: return " ? ";
  }
}

}  // namespace

LatticeExpr LatticeExpr::generator(std::size_t index) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::generator, index, {}, {}, {}}));
}

LatticeExpr LatticeExpr::constant(const Rational& c) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::constant, 0, c, {}, {}}));
}

LatticeExpr operator+(const LatticeExpr& a, const LatticeExpr& b) {
  using K = LatticeExpr::Kind;
  return LatticeExpr(std::make_shared<const LatticeExpr::Node>(LatticeExpr::Node{K::sum, 0, {}, a, b}));
}

LatticeExpr operator*(const Rational& c, const LatticeExpr& a) {
  using K = LatticeExpr::Kind;
  return LatticeExpr(std::make_shared<const LatticeExpr::Node>(LatticeExpr::Node{K::scale, 0, c, a, {}}));
}

LatticeExpr join(const LatticeExpr& a, const LatticeExpr& b) {
  using K = LatticeExpr::Kind;
  return LatticeExpr(std::make_shared<const LatticeExpr::Node>(LatticeExpr::Node{K::join, 0, {}, a, b}));
}

LatticeExpr meet(const LatticeExpr& a, const LatticeExpr& b) {
  using K = LatticeExpr::Kind;
  return LatticeExpr(std::make_shared<const LatticeExpr::Node>(LatticeExpr::Node{K::meet, 0, {}, a, b}));
}

LatticeExpr product(const LatticeExpr& a, const LatticeExpr& b) {
  using K = LatticeExpr::Kind;
  return LatticeExpr(
      std::make_shared<const LatticeExpr::Node>(LatticeExpr::Node{K::product, 0, {}, a, b}));
}

LatticeExpr::Kind LatticeExpr::kind() const { return node_->kind; }

std::size_t LatticeExpr::index() const {
  if (node_->kind != Kind::generator) throw ParameterError("not a generator node");
  return node_->index;
}

const Rational& LatticeExpr::scalar() const {
  if (node_->kind != Kind::constant && node_->kind != Kind::scale) {
    throw ParameterError("node carries no scalar");
  }
  return node_->scalar;
}

const LatticeExpr& LatticeExpr::lhs() const {
  if (!node_->lhs) throw ParameterError("leaf node has no children");
  return *node_->lhs;
}

const LatticeExpr& LatticeExpr::rhs() const {
  if (!node_->rhs) throw ParameterError("node has no second child");
  return *node_->rhs;
}

bool LatticeExpr::uses_lattice_ops() const {
  if (node_->kind == Kind::join || node_->kind == Kind::meet) return true;
  return (node_->lhs && node_->lhs->uses_lattice_ops()) ||
         (node_->rhs && node_->rhs->uses_lattice_ops());
}

bool LatticeExpr::uses_product() const {
  if (node_->kind == Kind::product) return true;
  return (node_->lhs && node_->lhs->uses_product()) || (node_->rhs && node_->rhs->uses_product());
}

std::size_t LatticeExpr::node_count() const {
  return 1 + (node_->lhs ? node_->lhs->node_count() : 0) +
         (node_->rhs ? node_->rhs->node_count() : 0);
}

std::string LatticeExpr::str() const {
  switch (node_->kind) {
    case Kind::generator: return "g" + std::to_string(node_->index);
    case Kind::constant: return node_->scalar.str();
    case Kind::scale: return node_->scalar.str() + "*" + node_->lhs->str();
    default: return "(" + node_->lhs->str() + symbol(node_->kind) + node_->rhs->str() + ")";
  }
}

FiniteFunction evaluate(const LatticeExpr& e, std::span<const FiniteFunction> gens,
                        std::size_t size, const EvalOptions& options) {
  using K = LatticeExpr::Kind;
  switch (e.kind()) {
    case K::generator: {
      if (e.index() >= gens.size()) {
        throw ParameterError("generator g" + std::to_string(e.index()) + " out of range");
      }
      const FiniteFunction& g = gens[e.index()];
      if (g.size() != size) throw ParameterError("generator size mismatch");
      return g;
    }
    case K::constant: return FiniteFunction::constant(size, e.scalar());
    case K::scale: return e.scalar() * evaluate(e.lhs(), gens, size, options);
    case K::sum:
      return evaluate(e.lhs(), gens, size, options) + evaluate(e.rhs(), gens, size, options);
    case K::join:
      return join(evaluate(e.lhs(), gens, size, options), evaluate(e.rhs(), gens, size, options));
    case K::meet:
      return meet(evaluate(e.lhs(), gens, size, options), evaluate(e.rhs(), gens, size, options));
    case K::product:
      if (!options.allow_product) throw ParameterError("product nodes are disabled");
      return multiply(evaluate(e.lhs(), gens, size, options),
                      evaluate(e.rhs(), gens, size, options));
  }
  throw InternalError("unknown expression node");
}

}  // namespace sandwich
