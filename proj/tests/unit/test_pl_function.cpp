#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "sandwich/error.hpp"
#include "sandwich/pl_function.hpp"
#include "shapes.hpp"

using namespace sandwich;
using namespace testsupport;

TEST_CASE("evaluation of affine and step functions") {
  CHECK(line("0", "1")(R("1/2")) == R("1/2"));
  const PLFunction s = step("1/2", "1");
  CHECK(s(R("1/4")) == 0);
  CHECK(s(R("1/2")) == 1);
  CHECK(s.left_limit(R("1/2")) == 0);
  CHECK(s.right_limit(R("1/2")) == 1);
  CHECK_THROWS_AS((void)s(R("3/2")), DomainError);
  CHECK_THROWS_AS((void)s(R("-1/8")), DomainError);
}

TEST_CASE("construction validates breakpoints") {
  CHECK_THROWS_AS(PLFunction::from_breakpoints({bp("0", "0", "0", "0")}), DomainError);
  CHECK_THROWS_AS(PLFunction::from_breakpoints({bp("0", "0", "0", "0"), bp("0", "0", "0", "0")}), DomainError);
  CHECK_THROWS_AS(PLFunction::from_breakpoints({bp("1", "0", "0", "0"), bp("0", "0", "0", "0")}), DomainError);
}

TEST_CASE("canonical form removes removable breakpoints") {
  const PLFunction f = PLFunction::from_breakpoints(
      {bp("0", "0", "0", "0"), bp("1/3", "1/3", "1/3", "1/3"), bp("1", "1", "1", "1")});
  CHECK(f.piece_count() == 1);
  CHECK(f == line("0", "1"));
  // A collinear breakpoint with a different point value stays.
  const PLFunction g = line("0", "1").with_value(R("1/3"), R("2"));
  CHECK(g.piece_count() == 2);
  CHECK(g(R("1/3")) == 2);
  CHECK(g.with_value(R("1/3"), R("1/3")) == line("0", "1"));
}

TEST_CASE("order comparison with witnesses") {
  CHECK(compare_le(line("0", "1"), line("0", "1")).holds);
  const Comparison c = compare_le(line("0", "1"), line("1", "0"));
  REQUIRE_FALSE(c.holds);
  REQUIRE(c.witness.has_value());
  CHECK(line("1", "0")(*c.witness) < line("0", "1")(*c.witness));
  CHECK(compare_le(step("1/2", "1"), constant("1")).holds);

  // A violation only at an isolated point value is still found.
  const Comparison d = compare_le(point_bump("1/3"), constant("1/2"));
  REQUIRE_FALSE(d.holds);
  CHECK(*d.witness == R("1/3"));
  CHECK_THROWS_AS((void)compare_le(line("0", "1"), PLFunction::constant(R("0"), R("2"), R("0"))), DomainError);
}

TEST_CASE("meet and join insert crossings") {
  const PLFunction v = join(line("0", "1"), line("1", "0"));
  REQUIRE(v.piece_count() == 2);
  CHECK(v.breakpoints()[1].x == R("1/2"));
  CHECK(v(R("1/2")) == R("1/2"));
  CHECK(meet(step("1/2", "1"), step("1/2", "1")) == step("1/2", "1"));

  const PLFunction m = meet(step("1/2", "1"), constant("1/2"));
  CHECK(m(R("1/4")) == 0);
  CHECK(m(R("1/2")) == R("1/2"));
  CHECK(m(R("3/4")) == R("1/2"));
  CHECK(m.left_limit(R("1/2")) == 0);
}

TEST_CASE("affine combinations") {
  const PLFunction f = step("1/2", "1");
  CHECK(affine_combination(1, f, 1, constant("0")) == f);
  CHECK(line("0", "1") + line("1", "0") == constant("1"));
  const PLFunction n = affine_combination(-1, f, 0, constant("0"));
  CHECK(n(R("1/4")) == 0);
  CHECK(n(R("1/2")) == -1);
  CHECK(n(R("3/4")) == -1);
  CHECK(-f == n);
  CHECK(f - f == constant("0"));
}

TEST_CASE("uniform norm") {
  CHECK(sup_norm(line("-1/2", "1/2")) == R("1/2"));
  CHECK(sup_norm(constant("0")) == 0);
  CHECK(sup_norm(step("1/2", "1") - constant("1")) == 1);
  // A jump limit that is never attained still counts toward the supremum.
  CHECK(sup_norm(step("1/2", "0")) == 1);
}

TEST_CASE("meet_all and join_all") {
  std::vector<PLFunction> fs = {line("0", "1"), constant("1/2"), line("1", "0")};
  const PLFunction m = meet_all(fs);
  CHECK(m(R("1/2")) == R("1/2"));
  CHECK(m(R("0")) == 0);
  CHECK(m(R("1")) == 0);
  CHECK(join_all(fs)(R("1/2")) == R("1/2"));
  CHECK_THROWS_AS(meet_all(std::vector<PLFunction>{}), ParameterError);
}

TEST_CASE("property: pointwise coherence of lattice and vector operations") {
  Gen g(0xC0FFEE);
  for (int trial = 0; trial < 200; ++trial) {
    const PLFunction f = random_pl(g), h = random_pl(g);
    const Rational a = g.rational(-3, 3, 8), b = g.rational(-3, 3, 8);
    const PLFunction j = join(f, h), m = meet(f, h), c = affine_combination(a, f, b, h);
    for (int k = 0; k < 5; ++k) {
      const Rational x = g.on_grid(0, 1, 997);
      CHECK(j(x) == max(f(x), h(x)));
      CHECK(m(x) == min(f(x), h(x)));
      CHECK(c(x) == a * f(x) + b * h(x));
    }
    for (const Rational& x : decisive_points(f, h)) {
      CHECK(j(x) == max(f(x), h(x)));
      CHECK(m(x) == min(f(x), h(x)));
    }
  }
}

TEST_CASE("property: canonical form agrees with the raw records") {
  Gen g(77);
  for (int trial = 0; trial < 200; ++trial) {
    // Build records with deliberately removable breakpoints inserted.
    const PLFunction base = random_pl(g);
    std::vector<Breakpoint> raw(base.breakpoints().begin(), base.breakpoints().end());
    std::vector<Breakpoint> padded;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      padded.push_back(raw[i]);
      if (i + 1 < raw.size()) {
        const Rational x = midpoint(raw[i].x, raw[i + 1].x);
        const Rational v = base(x);
        padded.push_back({x, v, v, v});
      }
    }
    const PLFunction f = PLFunction::from_breakpoints(padded);
    CHECK(f == base);
    for (const Rational& x : decisive_points(f, base)) CHECK(eval_records(padded, x) == f(x));
  }
}

TEST_CASE("property: structural equality iff pointwise equality") {
  Gen g(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const PLFunction f = random_pl(g, 3, 2), h = random_pl(g, 3, 2);
    bool pointwise = true;
    for (const Rational& x : decisive_points(f, h)) pointwise = pointwise && f(x) == h(x);
    CHECK((f == h) == pointwise);
    CHECK((sup_norm(f - h).is_zero()) == (f == h));
  }
}

TEST_CASE("property: lattice laws and norm triangle inequality") {
  Gen g(99);
  for (int trial = 0; trial < 150; ++trial) {
    const PLFunction a = random_pl(g), b = random_pl(g), c = random_pl(g);
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(sup_norm(a - c) <= sup_norm(a - b) + sup_norm(b - c));
    if (compare_le(a, b)) CHECK(compare_le(a + c, b + c).holds);
  }
}
