#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sandwich/error.hpp"
#include "sandwich/extension.hpp"
#include "shapes.hpp"

using namespace sandwich;
using namespace testsupport;

namespace {

std::vector<Rational> rs(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

const std::vector<Rational> kHalf = {Rational(1, 2)};

PuncturedFunction open_step() { return PuncturedFunction::make(step("1/2", "0"), kHalf); }

SeqFunction evens() { return SeqFunction::make({}, rs({1, 0})); }

}  // namespace

TEST_CASE("punctured functions") {
  const PuncturedFunction f = open_step();
  CHECK(f.is_removed(R("1/2")));
  CHECK(f(R("3/4")) == 1);
  CHECK_THROWS_AS((void)f(R("1/2")), DomainError);
  // Carrier values at removed points are irrelevant to identity.
  CHECK(PuncturedFunction::make(step("1/2", "1"), kHalf) == f);
  CHECK_THROWS_AS(PuncturedFunction::make(step("1/2", "0"), {R("0")}), DomainError);
  CHECK_THROWS_AS(PuncturedFunction::make(step("1/2", "0"), {R("2")}), DomainError);
  // On X the open step is continuous.
  CHECK(is_usc(f).holds);
  CHECK(is_lsc(f).holds);
}

TEST_CASE("extensions on the punctured interval") {
  const PuncturedFunction f = open_step();
  const PLFunction F = extend_upper(f);
  CHECK(F(R("1/2")) == 1);
  CHECK(restricts_to(F, f));
  CHECK(is_usc(F).holds);
  const PLFunction G = extend_lower(f);
  CHECK(G(R("1/2")) == 0);
  CHECK(is_lsc(G).holds);
  CHECK(extend_lower(PuncturedFunction::make(constant("1"), kHalf)) == constant("1"));

  const PuncturedFunction bad = PuncturedFunction::make(step("1/4", "0"), kHalf);
  CHECK_THROWS_AS(extend_upper(bad), PreconditionError);
}

TEST_CASE("extensions on the one-point model") {
  const SeqFunction zero = SeqFunction::constant(0);
  CHECK(extend_upper(zero) == SeqFunction::constant(0, Rational(0)));
  CHECK(*extend_upper(evens()).infinity_value() == 1);
  CHECK(*extend_lower(evens()).infinity_value() == 0);
  CHECK(*extend_lower(SeqFunction::constant(1)).infinity_value() == 1);
  CHECK_FALSE(compare_le(extend_upper(evens()), extend_lower(evens())).holds);
  CHECK_THROWS_AS(extend_upper(SeqFunction::constant(0, Rational(0))), ParameterError);
  CHECK(is_usc(extend_upper(evens())));
  CHECK(is_lsc(extend_lower(evens())));
  CHECK_FALSE(is_usc(evens().with_infinity(Rational(0))));
}

TEST_CASE("usc extensions are not unique") {
  const auto [u, v] = usc_extension_nonunique_demo(SeqFunction::constant(0));
  CHECK(*u.infinity_value() == 0);
  CHECK(*v.infinity_value() == 1);
  CHECK(is_usc(v));

  const PuncturedFunction zero = PuncturedFunction::make(constant("0"), kHalf);
  const auto [a, b] = usc_extension_nonunique_demo(zero);
  CHECK(a == constant("0"));
  CHECK(b(R("1/2")) == 1);
  CHECK(is_usc(b).holds);
  CHECK(restricts_to(b, zero));

  const PuncturedFunction two = PuncturedFunction::make(constant("0"), {R("1/3"), R("2/3")});
  const auto [c, d] = usc_extension_nonunique_demo(two);
  CHECK(d(R("1/3")) == 1);
  CHECK(d(R("2/3")) == 1);
  CHECK(compare_le(c, d).holds);

  const PuncturedFunction full = PuncturedFunction::make(constant("0"), {});
  CHECK_THROWS_AS(usc_extension_nonunique_demo(full), PreconditionError);
}

TEST_CASE("level-set closures") {
  const IntervalRegion up = superlevel_closure(open_step(), R("3/4"));
  CHECK(up == IntervalRegion::from_parts({{R("1/2"), R("1")}}));
  const IntervalRegion down = sublevel_closure(open_step(), R("1/4"));
  CHECK(down == IntervalRegion::from_parts({{R("0"), R("1/2")}}));
  CHECK(up.intersect(down).first() == R("1/2"));
  CHECK(superlevel_closure(PuncturedFunction::make(constant("0"), kHalf), R("1/2")).empty());

  const IndexRegion e = superlevel_closure(evens(), R("1"));
  CHECK(e.contains(0));
  CHECK_FALSE(e.contains(1));
  CHECK(e.contains(10));
  CHECK(e.contains_infinity());
  const IndexRegion finite_set = superlevel_closure(SeqFunction::make(rs({1, 1}), rs({0})), R("1"));
  CHECK_FALSE(finite_set.contains_infinity());
  CHECK(finite_set.first_index() == 0u);
  CHECK(superlevel_closure(SeqFunction::constant(0), R("1/2")).empty());
}

TEST_CASE("obstructions") {
  const std::optional<Obstruction> o = check_obstruction(open_step(), open_step(), R("3/4"), R("1/4"));
  REQUIRE(o.has_value());
  CHECK(std::get<Rational>(o->y) == R("1/2"));

  const std::optional<Obstruction> s = check_obstruction(evens(), evens(), R("3/4"), R("1/4"));
  REQUIRE(s.has_value());
  CHECK(std::get<SequencePoint>(s->y).is_infinity());

  const PuncturedFunction zero = PuncturedFunction::make(constant("0"), kHalf);
  const PuncturedFunction one = PuncturedFunction::make(constant("1"), kHalf);
  CHECK_FALSE(check_obstruction(zero, one, R("3/4"), R("1/4")).has_value());
  CHECK_FALSE(check_obstruction(SeqFunction::constant(0), SeqFunction::constant(1), R("3/4"), R("1/4")).has_value());
  CHECK_THROWS_AS((void)check_obstruction(zero, one, R("1/4"), R("1/4")), ParameterError);

  const auto [eta, lambda] = straddling_levels(R("1"), R("0"), {R("1"), R("0")});
  CHECK(eta == R("3/4"));
  CHECK(lambda == R("1/4"));
}

TEST_CASE("pipeline outcomes") {
  const Rational tol = Rational::pow2(-10);
  const PuncturedFunction zero = PuncturedFunction::make(constant("0"), kHalf);
  const PipelineResult ok = kt_pipeline(zero, open_step(), tol);
  REQUIRE(std::holds_alternative<PipelineSuccess>(ok));
  const auto& s = std::get<PipelineSuccess>(ok);
  CHECK(s.upper_extension == constant("0"));
  CHECK(s.lower_extension(R("1/2")) == 0);
  CHECK(compare_le(PuncturedFunction::make(constant("0") - tol, kHalf), s.h).holds);
  CHECK(compare_le(s.h, open_step()).holds);

  const PipelineResult bad = kt_pipeline(open_step(), open_step(), tol);
  REQUIRE(std::holds_alternative<Obstruction>(bad));
  CHECK(std::get<Rational>(std::get<Obstruction>(bad).y) == R("1/2"));

  // With nothing removed the pipeline is the compact construction.
  const PuncturedFunction f = PuncturedFunction::make(point_bump("1/2"), {});
  const PuncturedFunction g = PuncturedFunction::make(raised_window(), {});
  const PipelineResult plain = kt_pipeline(f, g, tol);
  REQUIRE(std::holds_alternative<PipelineSuccess>(plain));
  CHECK(std::get<PipelineSuccess>(plain).h.carrier() == kt_compact(point_bump("1/2"), raised_window(), tol).h);
}

TEST_CASE("property: extension soundness and minimality on random punctured inputs") {
  Gen g(9191);
  for (int trial = 0; trial < 60; ++trial) {
    // Restricting a usc carrier to X keeps it usc there.
    const PLFunction c = random_usc(g);
    const PuncturedFunction f = PuncturedFunction::make(c, kHalf);
    const PLFunction F = extend_upper(f);
    CHECK(restricts_to(F, f));
    CHECK(is_usc(F).holds);
    CHECK(F(R("1/2")) == max(c.left_limit(R("1/2")), c.right_limit(R("1/2"))));
    const auto [u, other] = usc_extension_nonunique_demo(f);
    CHECK(u == F);
    CHECK(compare_le(F, other).holds);
    CHECK_FALSE(F == other);

    const PuncturedFunction h = PuncturedFunction::make(random_lsc(g), kHalf);
    const PLFunction H = extend_lower(h);
    CHECK(restricts_to(H, h));
    CHECK(is_lsc(H).holds);
  }
}
