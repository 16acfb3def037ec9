#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sandwich/error.hpp"
#include "sandwich/finite_function.hpp"
#include "sandwich/seq_function.hpp"

using namespace sandwich;
using testsupport::Gen;

namespace {
std::vector<Rational> rs(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("sequence canonical form") {
  const SeqFunction a = SeqFunction::make(rs({}), rs({1, 0, 1, 0}));
  CHECK(a.period().size() == 2);
  const SeqFunction b = SeqFunction::make(rs({0, 1, 0}), rs({1, 0}));
  // The prefix is absorbed: 0,1,0,1,0,... is the period (0,1) from the start.
  CHECK(b.prefix().empty());
  CHECK(b == SeqFunction::make(rs({}), rs({0, 1})));
  CHECK(SeqFunction::make(rs({5}), rs({2, 2, 2})) == SeqFunction::make(rs({5}), rs({2})));
  CHECK_THROWS_AS(SeqFunction::make(rs({1}), rs({})), ParameterError);
}

TEST_CASE("sequence evaluation, limits and norm") {
  const SeqFunction evens = SeqFunction::make(rs({}), rs({1, 0}));
  CHECK(evens.at(0) == 1);
  CHECK(evens.at(7) == 0);
  CHECK(evens.at(1000000) == 1);
  CHECK(evens.limsup() == 1);
  CHECK(evens.liminf() == 0);
  const SeqFunction s = SeqFunction::make(rs({-3}), rs({1, 2}), Rational(5));
  CHECK(sup_norm(s) == 5);
  CHECK(sup_norm(s.restricted_to_naturals()) == 3);
  CHECK(s.with_infinity(Rational(7)).infinity_value() == Rational(7));
}

TEST_CASE("property: sequence canonicalization preserves values") {
  Gen g(31337);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> prefix, period;
    const auto plen = g.integer(0, 4), qlen = g.integer(1, 4);
    for (int i = 0; i < plen; ++i) prefix.push_back(Rational(g.integer(0, 2)));
    for (int i = 0; i < qlen; ++i) period.push_back(Rational(g.integer(0, 2)));
    const SeqFunction s = SeqFunction::make(prefix, period);
    for (std::uint64_t n = 0; n < 40; ++n) {
      const Rational expected = n < prefix.size() ? prefix[n] : period[(n - prefix.size()) % period.size()];
      CHECK(s.at(n) == expected);
    }
    CHECK(s.prefix().size() <= prefix.size());
    CHECK(s.period().size() <= period.size());
    const SeqFunction t = zip_with(s, s, [](const Rational& a, const Rational& b) { return a + b; });
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(t.at(n) == Rational(2) * s.at(n));
  }
}

TEST_CASE("finite function products and errors") {
  const FiniteFunction a(rs({1, 2})), b(rs({1, 1}));
  CHECK(multiply(a, b) == a);
  CHECK(multiply(FiniteFunction(rs({-1, 2})), FiniteFunction(rs({3, 0}))) == FiniteFunction(rs({-3, 0})));
  const FiniteFunction h({Rational(1, 2), Rational(1, 3)});
  CHECK(multiply(h, h) == FiniteFunction({Rational(1, 4), Rational(1, 9)}));
  CHECK_THROWS_AS(multiply(a, FiniteFunction(rs({1}))), DomainError);
  CHECK_THROWS_AS(FiniteFunction(rs({})), ParameterError);
}

TEST_CASE("finite function order, lattice and norm") {
  const FiniteFunction a(rs({1, 5, -2})), b(rs({2, 5, -1}));
  CHECK(compare_le(a, b).holds);
  const Comparison c = compare_le(b, a);
  CHECK_FALSE(c.holds);
  CHECK(*c.witness == 0);
  CHECK(join(a, b) == b);
  CHECK(meet(a, b) == a);
  CHECK(sup_norm(a) == 5);
  CHECK(a + Rational(1) == FiniteFunction(rs({2, 6, -1})));
  CHECK(Rational(2) * a - a == a);
}
