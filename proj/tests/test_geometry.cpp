#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "procdual/double_description.hpp"
#include "procdual/polyhedron.hpp"
#include "test_support.hpp"

using namespace procdual;
using namespace procdual::testing;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(format_rational(Rational(-3, 6)) == "-1/2");
  CHECK(format_rational(Rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("0.5"), MalformedInput);
  CHECK(parse_vector("1, -1/2 3") == vec({"1", "-1/2", "3"}));
  CHECK(primitive(vec({"1/2", "-3/4"})) == ivec({2, -3}));
}

TEST_CASE("cone double description: quadrant and halfplane") {
  dd::ConeConstraints q;
  q.inequalities = {ivec({1, 0}), ivec({0, 1})};
  const auto g = dd::generators_of(2, q);
  CHECK(g.lines.empty());
  CHECK(g.rays == std::vector<Vector>{ivec({0, 1}), ivec({1, 0})});

  dd::ConeConstraints h;
  h.inequalities = {ivec({0, 1})};
  const auto gh = dd::generators_of(2, h);
  CHECK(gh.lines.size() == 1);
  CHECK(gh.rays.size() == 1);

  const auto back = dd::constraints_of(2, g);
  CHECK(back.equalities.empty());
  CHECK(back.inequalities.size() == 2);
}

TEST_CASE("dd_convert: unit square has the four corners as points") {
  const auto sq = Polyhedron::from_constraints(2, {le({-1, 0}, 0), le({1, 0}, 1), le({0, -1}, 0), le({0, 1}, 1)});
  const auto& g = sq.generators();
  CHECK(g.points == std::vector<Vector>{ivec({0, 0}), ivec({0, 1}), ivec({1, 0}), ivec({1, 1})});
  CHECK(g.rays.empty());
  CHECK(g.lines.empty());
  CHECK(g.closure_points.empty());
  CHECK(sq.is_closed());
  CHECK(sq.is_bounded());
}

TEST_CASE("dd_convert: quadrant cone has rays e1, e2") {
  const auto q = Polyhedron::from_constraints(2, {le({-1, 0}, 0), le({0, -1}, 0)});
  CHECK(q.generators().points == std::vector<Vector>{ivec({0, 0})});
  CHECK(q.generators().rays == std::vector<Vector>{ivec({0, 1}), ivec({1, 0})});
}

TEST_CASE("dd_convert: open upper halfplane") {
  const auto h = Polyhedron::from_constraints(2, {lt({0, -1}, 0)});
  CHECK_FALSE(h.is_closed());
  const auto& g = h.generators();
  REQUIRE(g.lines.size() == 1);
  CHECK(g.lines[0] == ivec({1, 0}));
  CHECK(g.rays == std::vector<Vector>{ivec({0, 1})});
  REQUIRE(g.closure_points.size() == 1);
  CHECK(g.closure_points[0][1] == 0);
  for (const auto& p : g.points) CHECK(p[1] > 0);

  // Membership sampling against the input system and the generator route.
  const auto from_gens = Polyhedron::from_generators(2, g);
  RationalSampler rs(7);
  for (int i = 0; i < 1000; ++i) {
    Vector x = rs.vector(2, 3, 8);
    if (i % 5 == 0) x[1] = 0;
    const bool expected = x[1] > 0;
    CHECK(h.contains(x) == expected);
    CHECK(from_gens.contains(x) == expected);
  }
}

TEST_CASE("dd_convert is idempotent and detects emptiness") {
  const auto p = Polyhedron::from_constraints(3, {le({1, 1, 1}, 1), lt({-1, 0, 0}, 0), le({0, -1, 0}, 0),
                                                  le({0, 0, -1}, 0)});
  const auto again = Polyhedron::from_generators(3, p.generators());
  CHECK(again == p);
  const auto empty = Polyhedron::from_constraints(1, {lt({1}, 0), le({-1}, 0)});
  CHECK(empty.is_empty());
  CHECK(Polyhedron::from_constraints(1, {lt({1}, 0), lt({-1}, 0)}).is_empty());
  CHECK_FALSE(Polyhedron::from_constraints(1, {le({1}, 0), le({-1}, 0)}).is_empty());
}

TEST_CASE("dd_convert: malformed rows") {
  CHECK_THROWS_AS(Polyhedron::from_constraints(2, {le({1, 0, 0}, 1)}), MalformedInput);
}

TEST_CASE("redundant strict constraint is removed, essential one kept") {
  const auto p = Polyhedron::from_constraints(1, {lt({-1}, 0), le({-1}, -1)});
  CHECK(p.is_closed());
  CHECK(p.constraints().size() == 1);
  const auto q = Polyhedron::from_constraints(1, {le({-1}, 0), lt({-1}, 0), le({1}, 1)});
  CHECK_FALSE(q.is_closed());
  CHECK(q.constraints().size() == 2);
}

TEST_CASE("project: segment on a line and unconstrained coordinate") {
  const auto seg = Polyhedron::from_constraints(2, {eq({-2, 1}, 0), le({-1, 0}, 0), le({1, 0}, 1)});
  const auto shadow = project(seg, {0});
  CHECK(shadow.same_set(Polyhedron::from_constraints(1, {le({-1}, 0), le({1}, 1)})));
  const auto open = Polyhedron::from_constraints(2, {lt({-1, 0}, 0)});
  CHECK(project(open, {1}).is_universe());
  CHECK_THROWS_AS(project(open, {}), PreconditionError);
  CHECK(project(Polyhedron::empty(3), {0, 2}).is_empty());
}

TEST_CASE("project keeps strictness where it is forced") {
  // {(x, y): 0 < y, y <= x, x <= 1} -> x in (0, 1]
  const auto p = Polyhedron::from_constraints(2, {lt({0, -1}, 0), le({-1, 1}, 0), le({1, 0}, 1)});
  const auto s = project(p, {0});
  CHECK_FALSE(s.contains(ivec({0})));
  CHECK(s.contains(ivec({1})));
  CHECK(s.contains(vec({"1/1000"})));
  CHECK(s.same_set(project_by_generators(p, {0})));
}
