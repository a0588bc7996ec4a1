#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "procdual/program.hpp"
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

// A = {y2 > 0} ∪ {y1 >= 0, y2 = 0}, written independently of the library maps.
PolySet set_a() {
  return PolySet(2, {Polyhedron::from_constraints(2, {lt({0, -1}, 0)}),
                     Polyhedron::from_constraints(2, {le({-1, 0}, 0), eq({0, 1}, 0)})});
}

bool in_a(const Vector& y) { return y[1] > 0 || (y[1] == 0 && y[0] >= 0); }

InstanceSource box_with_zero_constraint() {
  InstanceSource s;
  s.id = "const-g";
  s.nx = 2;
  s.ny = 1;
  s.nz = 1;
  s.yplus_rays = {ivec({1})};
  s.zplus_rays = {ivec({1})};
  s.omega = SetSource::single({le({-1, 0}, 0), le({1, 0}, 1), le({0, -1}, 0), le({0, 1}, 1)});
  s.graph_f = SetSource::single({eq({1, 1, -1}, 0)});
  s.graph_g = SetSource::single({eq({0, 0, 1}, 0)});
  return s;
}

}  // namespace

TEST_CASE("instance JSON round trip is byte-stable") {
  const std::string once = dump_instance(example());
  const std::string twice = dump_instance(load_instance(once));
  CHECK(once == twice);
  CHECK(dump_instance(load_instance(dump_instance(scalar()))) == dump_instance(scalar()));
  CHECK(load_instance(once).omega().same_set(example().omega()));
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(load_instance("{"), MalformedInput);
  CHECK_THROWS_AS(load_instance(R"({"dims": {"x": 1, "y": 1, "z": 1}})"), MalformedInput);
  std::string text = dump_instance(scalar());
  const auto pos = text.find("\"10\"");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS_AS(load_instance(std::string(text).replace(pos, 4, "10")), MalformedInput);
  CHECK_THROWS_AS(load_instance(std::string(text).replace(pos, 4, "\"1/0\"")), MalformedInput);
  CHECK_THROWS_AS(load_instance_file(data_path("corpus/missing.json")), MalformedInput);
}

TEST_CASE("validate: example passes, non-pointed Y+ warns, nonconvex F fails") {
  const auto items = validate(example());
  CHECK(validation_passed(items));
  for (const auto& i : items) CHECK_MESSAGE(i.passed, i.check);

  InstanceSource half = example().source();
  half.yplus_rays = {ivec({0, 1}), ivec({1, 0}), ivec({-1, 0})};
  const auto h = validate(ProgramInstance(half));
  CHECK(validation_passed(h));
  bool warned = false;
  for (const auto& i : h) warned |= (i.check == "Y+ pointed" && !i.passed && !i.fatal);
  CHECK(warned);

  InstanceSource bad = box_with_zero_constraint();
  bad.ny = 2;
  bad.yplus_rays = {ivec({1, 0}), ivec({0, 1})};
  // F(x) is one of the boxes [0,1]² and [3,4]×[-4,-3]; adding the quadrant
  // leaves (3/2,-2) outside both epigraph pieces.
  bad.graph_f.pieced = true;
  bad.graph_f.pieces = {{le({0, 0, -1, 0}, 0), le({0, 0, 1, 0}, 1), le({0, 0, 0, -1}, 0), le({0, 0, 0, 1}, 1)},
                        {le({0, 0, -1, 0}, -3), le({0, 0, 1, 0}, 4), le({0, 0, 0, -1}, 4), le({0, 0, 0, 1}, -3)}};
  CHECK_FALSE(validation_passed(validate(ProgramInstance(bad))));
}

TEST_CASE("feasible set of the example") {
  const PolySet s0 = feasible_set(example(), ivec({0}));
  const PolySet expected(2, {Polyhedron::from_constraints(2, {lt({0, -1}, 0), le({0, 1}, 1)}),
                             Polyhedron::singleton(ivec({0, 0}))});
  CHECK(s0.same_set(expected));
  CHECK_FALSE(s0.contains(ivec({1, 0})));
  CHECK(feasible_set(example(), ivec({-2})).is_empty());
  const PolySet sm1 = feasible_set(example(), ivec({-1}));
  CHECK(sm1.same_set(PolySet(Polyhedron::singleton(ivec({0, 0})))));
}

TEST_CASE("feasible set with a constant constraint map") {
  const ProgramInstance inst(box_with_zero_constraint());
  CHECK(feasible_set(inst, ivec({0})).same_set(inst.omega()));
  CHECK(feasible_set(inst, ivec({3})).same_set(inst.omega()));
  CHECK(feasible_set(inst, vec({"-1/2"})).is_empty());
}

TEST_CASE("value graph of the example against the hand-derived set") {
  const auto& maps = value_graph(example());
  // ({-1} × Y+) ∪ ((-1, ∞) × A)
  const PolySet truth(3, {Polyhedron::from_constraints(3, {eq({1, 0, 0}, -1), le({0, -1, 0}, 0), le({0, 0, -1}, 0)}),
                          Polyhedron::from_constraints(3, {lt({-1, 0, 0}, 1), lt({0, 0, -1}, 0)}),
                          Polyhedron::from_constraints(3, {lt({-1, 0, 0}, 1), le({0, -1, 0}, 0), eq({0, 0, 1}, 0)})});
  CHECK(maps.graph_v_plus.same_set(truth));
  // The closed interval [-1, ∞) × A differs from the graph only at z = -1.
  const PolySet interval_a(3, {Polyhedron::from_constraints(3, {le({-1, 0, 0}, 1), lt({0, 0, -1}, 0)}),
                               Polyhedron::from_constraints(3, {le({-1, 0, 0}, 1), le({0, -1, 0}, 0), eq({0, 0, 1}, 0)})});
  CHECK_FALSE(maps.graph_v_plus.same_set(interval_a));
  CHECK(maps.graph_v_plus.closure().same_set(interval_a.closure()));
  CHECK(slice(maps.graph_v_plus, ivec({0})).same_set(set_a()));
  CHECK(slice(maps.graph_v_plus, vec({"5/2"})).same_set(set_a()));
  CHECK(slice(maps.graph_v_plus, ivec({-2})).is_empty());

  RationalSampler rs(5);
  for (int i = 0; i < 300; ++i) {
    const Vector w = rs.vector(3, 3, 4);
    const bool expected = (w[0] == -1 && w[1] >= 0 && w[2] >= 0) || (w[0] > -1 && in_a({w[1], w[2]}));
    CHECK(maps.graph_v_plus.contains(w) == expected);
  }
}

TEST_CASE("value graph invariants") {
  for (const auto* inst : {&example(), &scalar()}) {
    const auto& maps = value_graph(*inst);
    const auto& yg = inst->yplus().cone().generators();
    std::vector<Vector> rays;
    for (const auto& r : yg.rays) {
      Vector w = zeros(inst->nz());
      w.insert(w.end(), r.begin(), r.end());
      rays.push_back(w);
    }
    CHECK(maps.graph_v_plus.add_rays(rays).same_set(maps.graph_v_plus));
    CHECK(maps.graph_v_plus.is_convex());
  }
}

TEST_CASE("feasible sets grow along Z+") {
  RationalSampler rs(9);
  for (int i = 0; i < 20; ++i) {
    const Vector z = rs.vector(1, 2, 4);
    Vector z2 = z;
    z2[0] += abs(rs.next(2, 4));
    CHECK(feasible_set(example(), z).is_subset_of(feasible_set(example(), z2)));
    CHECK(feasible_set(scalar(), z).is_subset_of(feasible_set(scalar(), z2)));
  }
}

TEST_CASE("Slater condition") {
  const auto s = slater_check(example());
  REQUIRE(s.holds);
  CHECK(example().omega().contains(*s.x1));
  CHECK((*s.x1)[1] > 0);
  CHECK((*s.x1)[1] < 1);
  CHECK((*s.g1)[0] < 0);
  CHECK_FALSE(slater_check(ProgramInstance(box_with_zero_constraint())).holds);
  InstanceSource empty = box_with_zero_constraint();
  empty.omega = SetSource::single({le({1, 0}, -1), le({-1, 0}, 0)});
  CHECK_FALSE(slater_check(ProgramInstance(empty)).holds);
}

TEST_CASE("marginal minimal points") {
  CHECK(marginal_min_points(example(), ivec({0})) == std::vector<Vector>{ivec({0, 0})});
  CHECK(marginal_min_points(example(), ivec({-2})).empty());
  CHECK(marginal_min_points(scalar(), ivec({0})) == std::vector<Vector>{ivec({1})});
  // M(z) = max(0, 1 - z) on the scalar instance.
  for (const char* z : {"-3", "1/2", "1", "2", "7"}) {
    const Rational zz = parse_rational(z);
    const Rational m = std::max(Rational(0), Rational(1) - zz);
    CHECK(marginal_min_points(scalar(), Vector{zz}) == std::vector<Vector>{Vector{m}});
  }
}

TEST_CASE("preimages and point images") {
  const auto x0 = find_preimage(example(), ivec({0, 0}));
  REQUIRE(x0);
  CHECK(*x0 == ivec({0, 0}));
  CHECK_FALSE(find_preimage(example(), ivec({1, 0})));
  CHECK(image_f(example(), ivec({1, 2})).same_set(PolySet(Polyhedron::singleton(ivec({1, 2})))));
  CHECK(image_g_plus(example(), ivec({0, 0})).same_set(PolySet(Polyhedron::from_constraints(1, {le({-1}, 1)}))));
  const auto xs = find_preimage(scalar(), ivec({1}));
  REQUIRE(xs);
  CHECK(*xs == ivec({1}));
}
