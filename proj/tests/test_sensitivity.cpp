#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "procdual/sensitivity.hpp"
#include "test_support.hpp"

using namespace procdual;
using namespace procdual::testing;

namespace {

const ProgramInstance& example() {
  static const ProgramInstance inst = load_instance_file(data_path("corpus/example3.json"));
  return inst;
}

const ProgramInstance& scalar() {
  static const ProgramInstance inst = load_instance_file(data_path("corpus/scalar.json"));
  return inst;
}

const ProgramInstance& scalar_inactive() {
  static const ProgramInstance inst = load_instance_file(data_path("corpus/scalar_inactive.json"));
  return inst;
}

ProgramInstance scalar_kink() {
  return load_instance(R"({
    "cones": {"yplus": [["1"]], "zplus": [["1"]]},
    "dims": {"x": 1, "y": 1, "z": 1},
    "graphF": [{"coeffs": ["-1", "1"], "rel": "=", "rhs": "0"}],
    "graphG": [{"coeffs": ["1", "1"], "rel": "=", "rhs": "0"}],
    "id": "kink",
    "omega": [{"coeffs": ["-1"], "rel": "<=", "rhs": "0"}, {"coeffs": ["1"], "rel": "<=", "rhs": "10"}]
  })");
}

std::vector<Vector> zs() { return {ivec({-1}), ivec({0}), ivec({1})}; }

}  // namespace

TEST_CASE("adjoint of the identity graph") {
  const auto id = make_process(Polyhedron::from_constraints(2, {eq({1, -1}, 0)}), 1);
  const auto a = adjoint(id, AdjointDirection::Forward);
  CHECK(a.graph.same_set(Polyhedron::from_constraints(2, {eq({1, -1}, 0)})));
  // Only the ray (1,1): z* <= y*.
  const auto ray = make_process(Polyhedron::cone(2, {ivec({1, 1})}), 1);
  const auto b = adjoint(ray, AdjointDirection::Forward);
  CHECK(b.graph.same_set(Polyhedron::from_constraints(2, {le({-1, 1}, 0)})));
}

TEST_CASE("adjoint of the quadrant and the double adjoint") {
  const auto q = make_process(Polyhedron::cone(2, {ivec({1, 0}), ivec({0, 1})}), 1);
  const auto a = adjoint(q, AdjointDirection::Forward);
  // (y*, z*) with z* <= 0 <= y*.
  CHECK(a.graph.same_set(Polyhedron::from_constraints(2, {le({-1, 0}, 0), le({0, 1}, 0)})));
  RationalSampler rs(17);
  for (int i = 0; i < 20; ++i) {
    std::vector<Vector> rays{rs.vector(3, 3, 3), rs.vector(3, 3, 3), rs.vector(3, 3, 3)};
    const auto p = make_process(Polyhedron::cone(3, rays), 1);
    const auto back = adjoint(adjoint(p, AdjointDirection::Forward), AdjointDirection::Reverse);
    CHECK(back.graph.same_set(p.graph));
  }
}

TEST_CASE("Lagrange process of the example and the scalar program") {
  const auto lp = lagrange_process(example(), ivec({0, 0}));
  CHECK(lp.routes_agree);
  CHECK(lp.process.graph.same_set(Polyhedron::from_constraints(3, {le({0, 0, -1}, 0)})));
  const auto ls = lagrange_process(scalar(), ivec({1}));
  CHECK(ls.routes_agree);
  CHECK(ls.process.graph.same_set(Polyhedron::from_constraints(2, {le({1, -1}, 0)})));
  CHECK_THROWS_AS(lagrange_process(example(), ivec({1, 0})), PreconditionError);
}

TEST_CASE("contingent slices of the scalar value graph") {
  const PolySet& g = value_graph(scalar()).graph_v_plus;
  const Vector base = ivec({0, 1});
  CHECK(contingent_derivative_slice(g, base, ivec({1})).same_set(PolySet(Polyhedron::from_constraints(1, {le({-1}, 1)}))));
  CHECK(contingent_derivative_slice(g, base, ivec({-1})).same_set(PolySet(Polyhedron::from_constraints(1, {le({-1}, -1)}))));
}

TEST_CASE("derivative identity") {
  const auto e = verify_derivative_identity(example(), ivec({0, 0}), zs());
  CHECK_MESSAGE(e.passed(), render_text(RunReport{"example3", "derivative-check", {}, {}, {e}}));
  CHECK(verify_derivative_identity(scalar(), ivec({1}), zs()).passed());
  CHECK(verify_derivative_identity(scalar_inactive(), ivec({0}), zs()).passed());
  CHECK_FALSE(verify_derivative_identity(scalar(), ivec({2}), zs()).precondition_ok());
}

TEST_CASE("difference quotient oracle") {
  const auto one = marginal_derivative_oracle(scalar(), ivec({1}), ivec({1}));
  REQUIRE(one.stable);
  CHECK(one.limit == std::vector<Vector>{ivec({-1})});
  const auto back = marginal_derivative_oracle(scalar(), ivec({1}), ivec({-3}));
  REQUIRE(back.stable);
  CHECK(back.limit == std::vector<Vector>{ivec({3})});
  const auto zero = marginal_derivative_oracle(scalar(), ivec({1}), ivec({0}));
  REQUIRE(zero.stable);
  CHECK(zero.limit == std::vector<Vector>{ivec({0})});
  const auto ex = marginal_derivative_oracle(example(), ivec({0, 0}), ivec({1}));
  REQUIRE(ex.stable);
  CHECK(ex.limit == std::vector<Vector>{ivec({0, 0})});
}

TEST_CASE("domination grid") {
  CHECK(domination_grid(1).size() == 13);
  CHECK(domination_grid(2).size() == 169);
  for (const auto& z : domination_grid(1)) CHECK(domination_holds_at(scalar(), z));
  CHECK_FALSE(domination_holds_at(example(), ivec({0})));
}

TEST_CASE("sensitivity report") {
  const auto s = sensitivity_report(scalar(), ivec({1}), zs());
  CHECK(s.hypotheses_certified);
  CHECK(s.certified_by == "(b)");
  CHECK(s.comparison.passed());
  const auto e = sensitivity_report(example(), ivec({0, 0}), {ivec({1})});
  CHECK_FALSE(e.hypotheses_certified);
  const Clause* c = e.comparison.find("z = 1");
  REQUIRE(c);
  CHECK(c->informational);
  CHECK_FALSE(c->passed);
  CHECK(e.comparison.passed());
}

TEST_CASE("scalar recovery") {
  const auto r = scalar_recovery_check(scalar(), {ivec({-2}), ivec({1}), ivec({3})});
  REQUIRE(r.ell0);
  CHECK(*r.ell0 == 1);
  CHECK(r.certificate.passed());
  const auto in = scalar_recovery_check(scalar_inactive(), zs());
  REQUIRE(in.ell0);
  CHECK(*in.ell0 == 0);
  CHECK(in.certificate.passed());
  const auto k = scalar_recovery_check(scalar_kink(), zs());
  CHECK_FALSE(k.ell0);
  CHECK_FALSE(k.certificate.passed());
  CHECK_THROWS_AS(scalar_recovery_check(example(), zs()), PreconditionError);
}

TEST_CASE("single-valued graphs") {
  CHECK(is_single_valued(scalar().graph_f(), 1));
  CHECK(is_single_valued(example().graph_f(), 2));
  CHECK_FALSE(is_single_valued(PolySet(Polyhedron::from_constraints(2, {le({-1, 1}, 0)})), 1));
}
