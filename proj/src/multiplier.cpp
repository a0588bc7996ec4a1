#include "procdual/multiplier.hpp"

#include "procdual/cones.hpp"
#include "procdual/geometry_io.hpp"
#include "procdual/lift.hpp"

namespace procdual {

namespace {

Vector concat(std::span<const Rational> a, std::span<const Rational> b) {
  Vector v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

Rational norm1(std::span<const Rational> v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

// A point of a ∩ (y0 - K) outside y0 + K, if any.
std::optional<Vector> domination_witness(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  const Polyhedron above = k.cone().translate(y0);
  const PolySet below = a.intersect(k.cone().negated().translate(y0));
  for (const auto& piece : below.pieces()) {
    const PolySet rest = difference(piece, above);
    if (!rest.is_empty()) return rest.pieces().front().some_point();
  }
  return std::nullopt;
}

}  // namespace

PolyhedralProcess make_process(Polyhedron graph, std::size_t nz) {
  if (nz == 0 || graph.dim() <= nz) throw MalformedInput("process graph: bad dimensions");
  if (!is_cone(graph)) throw MalformedInput("process graph is not a closed cone");
  PolyhedralProcess p{std::move(graph), nz, 0};
  p.ny = p.graph.dim() - nz;
  p.closed = p.graph.is_closed();
  p.convex = true;
  p.pointed = is_pointed(p.graph);
  p.domain_full = project(p.graph, iota_indices(0, nz)).is_universe();
  return p;
}

PolySet process_image(const PolyhedralProcess& p, std::span<const Rational> z) {
  return slice(PolySet(p.graph), z);
}

PolySet process_image(const PolyhedralProcess& p, const PolySet& s) {
  if (s.dim() != p.nz) throw MalformedInput("process_image: dimension mismatch");
  const std::size_t dim = p.nz + p.ny;
  Lift lift(dim);
  lift.require(s, AffineMap::block(dim, 0, p.nz));
  lift.require(p.graph, AffineMap::block(dim, 0, dim));
  return lift.project_onto(iota_indices(p.nz, dim));
}

bool is_nondominated_for_program(const ProgramInstance& inst, std::span<const Rational> y0) {
  if (y0.size() != inst.ny()) throw MalformedInput("y0 has the wrong dimension");
  return is_nondominated_point(y0, value_set(inst, zeros(inst.nz())), inst.yplus());
}

SeparatorCone separator_cone(const ProgramInstance& inst, std::span<const Rational> y0) {
  if (!is_nondominated_for_program(inst, y0)) {
    throw PreconditionError("y0 = (" + format_vector(y0, ",") + ") is not a nondominated point of P(0)");
  }
  const std::size_t nz = inst.nz(), ny = inst.ny(), dim = nz + ny;
  const PolySet& graph = value_graph(inst).graph_v_plus;
  const Vector apex = concat(zeros(nz), y0);

  SeparatorCone out{Polyhedron::empty(dim), Vector(y0.begin(), y0.end()), Polyhedron::empty(dim), false};
  out.tangent_cone = cone_hull_closure(graph, apex);
  out.cone = polar_positive(out.tangent_cone);

  // Defining inequalities <y*, y0> <= <z*, z> + <y*, y> on the generators of
  // the graph, together with nonnegativity on Z₊ × Y₊.
  std::vector<Constraint> cs;
  auto nonneg = [&](const Vector& v) {
    if (!is_zero(v)) cs.push_back(make_constraint(negate(v), Relation::LessEqual, Rational(0)));
  };
  const Generators g = graph.all_generators();
  for (const auto* list : {&g.points, &g.closure_points}) {
    for (const auto& p : *list) nonneg(subtract(p, apex));
  }
  for (const auto& r : g.rays) nonneg(r);
  for (const auto& l : g.lines) cs.push_back(make_constraint(l, Relation::Equal, Rational(0)));
  for (const auto& r : inst.zplus().cone().generators().rays) nonneg(concat(r, zeros(ny)));
  for (const auto& r : inst.yplus().cone().generators().rays) nonneg(concat(zeros(nz), r));
  const Polyhedron direct = Polyhedron::from_constraints(dim, std::move(cs));
  out.formulas_agree = direct.same_set(out.cone);
  return out;
}

DualPair pick_dual_pair(const Polyhedron& cone, std::size_t nz) {
  const auto& g = cone.generators();
  Vector sum = zeros(cone.dim());
  for (const auto& r : g.rays) sum = add(sum, r);
  if (g.rays.empty() && !g.lines.empty()) sum = g.lines.front();
  if (is_zero(sum)) throw PreconditionError("no separator: the separator cone is {0}");
  DualPair pair{Vector(sum.begin(), sum.begin() + nz), Vector(sum.begin() + nz, sum.end())};
  if (is_zero(pair.y_star)) throw PreconditionError("Slater violated: the selected pair has y* = 0");
  return pair;
}

DualPair pick_dual_pair(const SeparatorCone& s) { return pick_dual_pair(s.cone, s.cone.dim() - s.y0.size()); }

BuiltMultiplier build_multiplier(const DualPair& pair, const OrderingCone& yplus) {
  if (pair.y_star.size() != yplus.dim()) throw MalformedInput("build_multiplier: y* has the wrong dimension");
  if (is_zero(pair.y_star)) throw PreconditionError("build_multiplier: y* = 0");
  if (!yplus.solid()) throw PreconditionError("build_multiplier: Y+ must be solid");
  const std::size_t nz = pair.z_star.size();
  BuiltMultiplier out{PolyhedralProcess{Polyhedron::empty(nz + yplus.dim())}, {}, {}, 0, 0, {}, false};
  const Vector yp = yplus.ray_sum();
  out.t = concat(negate(pair.z_star), pair.y_star);
  out.center = concat(zeros(nz), yp);
  out.t0 = dot(out.t, out.center);
  if (out.t0 <= 0) throw PreconditionError("inconsistent pair: T(0, y+) = " + format_rational(out.t0) + " <= 0");
  out.delta = out.t0 / (2 * norm1(out.t));
  auto box = cone_of_box_translate(out.center, out.delta);
  out.vertices = std::move(box.vertices);
  out.process = make_process(std::move(box.cone), nz);
  out.strict_containment = strictly_positive_on(out.process.graph, out.t);
  return out;
}

PolySet psi_set(const ProgramInstance& inst, const PolyhedralProcess& delta) {
  if (delta.nz != inst.nz() || delta.ny != inst.ny()) throw MalformedInput("psi_set: process dimensions mismatch");
  const std::size_t nx = inst.nx(), nz = inst.nz(), ny = inst.ny();
  const std::size_t dim = nx + 2 * nz + 2 * ny;
  const AffineMap x = AffineMap::block(dim, 0, nx);
  const AffineMap g = AffineMap::block(dim, nx, nz);
  const AffineMap z = AffineMap::block(dim, nx + nz, nz);
  const AffineMap y1 = AffineMap::block(dim, nx + 2 * nz, ny);
  const AffineMap y = AffineMap::block(dim, nx + 2 * nz + ny, ny);
  Lift lift(dim);
  lift.require(inst.omega(), x);
  lift.require(inst.graph_f(), AffineMap::stack(x, y1));
  lift.require(inst.graph_g(), AffineMap::stack(x, g));
  lift.require(inst.zplus().cone(), z - g);
  lift.require(delta.graph, AffineMap::stack(z, y - y1));
  return lift.project_onto(iota_indices(nx + 2 * nz + ny, dim));
}

PolySet multiplier_inclusion_set(const ProgramInstance& inst, const PolyhedralProcess& delta, std::span<const Rational> x0) {
  return process_image(delta, image_g_plus(inst, x0)).intersect(inst.yplus().cone().negated());
}

Certificate verify_lagrange_multiplier(const ProgramInstance& inst, const PolyhedralProcess& delta,
                                       std::span<const Rational> y0) {
  Certificate c;
  c.title = "Lagrange multiplier at y0 = (" + format_vector(y0, ",") + ")";
  if (!is_nondominated_for_program(inst, y0)) {
    c.precondition_error = "y0 is not a nondominated point of P(0)";
    return c;
  }
  const OrderingCone& yplus = inst.yplus();
  const PolySet psi = psi_set(inst, delta);
  c.witness("Psi(Delta)", to_text(psi));
  c.note("Delta pointed", "Graph(Δ) ∩ −Graph(Δ) = {0}", delta.pointed);
  c.note("Delta full domain", "Dom(Δ) = Z", delta.domain_full);
  c.add("y0 in cl Psi", "y0 ∈ cl Ψ(Δ)", psi.closure_contains(y0));
  const auto dominator = domination_witness(y0, psi, yplus);
  c.add("y0 nondominated by Psi", "Ψ(Δ) ∩ (y0 − Y+) ⊆ y0 + Y+", !dominator,
        dominator ? "dominated by (" + format_vector(*dominator, ",") + ")" : "");
  if (const auto x0 = find_preimage(inst, y0)) {
    c.witness("x0", format_vector(*x0, ","));
    c.add("y0 minimal in P[Delta]", "y0 ∈ Ψ(Δ) and nondominated by Ψ(Δ)", psi.contains(y0) && !dominator);
    const PolySet inc = multiplier_inclusion_set(inst, delta, *x0);
    const Polyhedron lineality = yplus.cone().intersect(yplus.cone().negated());
    c.add("multiplier inclusion", "Δ(G(x0) + Z+) ∩ (−Y+) ⊆ (−Y+) ∩ Y+", inc.is_subset_of(lineality));
    c.witness("Delta(G(x0)+Z+) ∩ (-Y+)", to_text(inc));
  } else {
    c.note("x0 exists", "y0 ∈ F(x0) for some feasible x0", false);
  }
  return c;
}

PolyhedralProcess minus_s_process(const DualPair& pair) {
  const std::size_t nz = pair.z_star.size();
  const Vector row = concat(pair.z_star, negate(pair.y_star));
  return make_process(
      Polyhedron::from_constraints(nz + pair.y_star.size(), {make_constraint(row, Relation::LessEqual, Rational(0))}),
      nz);
}

}  // namespace procdual
