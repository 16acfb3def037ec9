#include "sandwich/finite_function.hpp"

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

void require_same_size(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.size() != g.size()) {
    throw DomainError("finite spaces of different sizes " + std::to_string(f.size()) + " and " +
                      std::to_string(g.size()));
  }
}

template <class Op>
FiniteFunction zip(const FiniteFunction& f, const FiniteFunction& g, Op op) {
  require_same_size(f, g);
  std::vector<Rational> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(op(f[i], g[i]));
  return FiniteFunction(std::move(out));
}

}  // namespace

FiniteFunction::FiniteFunction(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("finite space must have at least one point");
}

FiniteFunction FiniteFunction::constant(std::size_t n, const Rational& c) {
  return FiniteFunction(std::vector<Rational>(n, c));
}

FiniteFunction operator+(const FiniteFunction& f, const FiniteFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return a + b; });
}

FiniteFunction operator-(const FiniteFunction& f, const FiniteFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return a - b; });
}

FiniteFunction operator*(const Rational& c, const FiniteFunction& f) {
  std::vector<Rational> out(f.values().begin(), f.values().end());
  for (Rational& v : out) v *= c;
  return FiniteFunction(std::move(out));
}

FiniteFunction operator+(const FiniteFunction& f, const Rational& c) {
  std::vector<Rational> out(f.values().begin(), f.values().end());
  for (Rational& v : out) v += c;
  return FiniteFunction(std::move(out));
}

FiniteFunction meet(const FiniteFunction& f, const FiniteFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return min(a, b); });
}

FiniteFunction join(const FiniteFunction& f, const FiniteFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return max(a, b); });
}

FiniteFunction multiply(const FiniteFunction& f, const FiniteFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return a * b; });
}

Comparison compare_le(const FiniteFunction& f, const FiniteFunction& g) {
  require_same_size(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] < f[i]) return {false, Rational(static_cast<long long>(i))};
  }
  return {};
}

Rational sup_norm(const FiniteFunction& f) {
  Rational best;
  for (const Rational& v : f.values()) best = max(best, abs(v));
  return best;
}

}  // namespace sandwich
