#pragma once

#include <span>
#include <vector>

#include "sandwich/pl_function.hpp"
#include "sandwich/rational.hpp"

namespace sandwich {

/// Rational-valued function on the finite discrete space {0, ..., n-1}.
class FiniteFunction {
 public:
  /// Throws ParameterError when `values` is empty.
  explicit FiniteFunction(std::vector<Rational> values);
  static FiniteFunction constant(std::size_t n, const Rational& c);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t point) const { return values_[point]; }
  std::span<const Rational> values() const { return values_; }

  bool operator==(const FiniteFunction&) const = default;

 private:
  std::vector<Rational> values_;
};

FiniteFunction operator+(const FiniteFunction& f, const FiniteFunction& g);
FiniteFunction operator-(const FiniteFunction& f, const FiniteFunction& g);
FiniteFunction operator*(const Rational& c, const FiniteFunction& f);
FiniteFunction operator+(const FiniteFunction& f, const Rational& c);

FiniteFunction meet(const FiniteFunction& f, const FiniteFunction& g);
FiniteFunction join(const FiniteFunction& f, const FiniteFunction& g);

/// Componentwise product. Throws DomainError on size mismatch.
FiniteFunction multiply(const FiniteFunction& f, const FiniteFunction& g);

/// f <= g componentwise; the witness is a point id.
Comparison compare_le(const FiniteFunction& f, const FiniteFunction& g);

Rational sup_norm(const FiniteFunction& f);

}  // namespace sandwich
