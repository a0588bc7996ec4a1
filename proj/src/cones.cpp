#include "procdual/cones.hpp"

#include <algorithm>

namespace procdual {

bool is_cone(const Polyhedron& p) {
  if (p.is_empty() || !p.contains(zeros(p.dim()))) return false;
  return std::all_of(p.constraints().begin(), p.constraints().end(),
                     [](const Constraint& c) { return c.rhs == 0 && c.rel != Relation::Less; });
}

bool is_pointed(const Polyhedron& c) {
  if (c.is_empty()) return true;
  const Polyhedron both = c.intersect(c.negated());
  const auto& g = both.generators();
  return g.rays.empty() && g.lines.empty() &&
         std::all_of(g.points.begin(), g.points.end(), [](const Vector& v) { return is_zero(v); });
}

Polyhedron polar_positive(const Polyhedron& c) {
  const std::size_t n = c.dim();
  if (c.is_empty()) return Polyhedron::universe(n);
  const auto& g = c.generators();
  std::vector<Constraint> cs;
  auto nonneg = [&](const Vector& v) {
    if (!is_zero(v)) cs.push_back(make_constraint(negate(v), Relation::LessEqual, Rational(0)));
  };
  for (const auto& v : g.points) nonneg(v);
  for (const auto& v : g.closure_points) nonneg(v);
  for (const auto& v : g.rays) nonneg(v);
  for (const auto& v : g.lines) cs.push_back(make_constraint(v, Relation::Equal, Rational(0)));
  return Polyhedron::from_constraints(n, std::move(cs));
}

namespace {

Polyhedron generated_cone(const PolySet& s, std::span<const Rational> apex) {
  const Generators g = s.all_generators();
  std::vector<Vector> rays = g.rays;
  for (const auto* list : {&g.points, &g.closure_points}) {
    for (const auto& p : *list) {
      Vector d = subtract(p, apex);
      if (!is_zero(d)) rays.push_back(std::move(d));
    }
  }
  return Polyhedron::cone(s.dim(), rays, g.lines);
}

}  // namespace

Polyhedron cone_hull_closure(const PolySet& s, std::span<const Rational> apex) {
  if (apex.size() != s.dim()) throw MalformedInput("cone_hull_closure: apex dimension mismatch");
  if (!s.closure_contains(apex)) {
    throw PreconditionError("cone_hull_closure: apex " + format_vector(apex, ",") + " is outside the closure");
  }
  return generated_cone(s, apex);
}

Polyhedron closed_conic_hull(const PolySet& s) { return generated_cone(s, zeros(s.dim())); }

Polyhedron cone_hull_closure(const Polyhedron& p, std::span<const Rational> apex) {
  return cone_hull_closure(PolySet(p.is_empty() ? Polyhedron::empty(p.dim()) : p), apex);
}

bool strictly_positive_on(const Polyhedron& cone, std::span<const Rational> t) {
  const auto& g = cone.generators();
  if (!g.lines.empty()) return false;
  return std::all_of(g.rays.begin(), g.rays.end(), [&](const Vector& r) { return dot(t, r) > 0; });
}

std::vector<Vector> null_space_basis(std::size_t dim, const std::vector<Vector>& rows) {
  std::vector<Constraint> cs;
  for (const auto& r : rows) cs.push_back(make_constraint(r, Relation::Equal, Rational(0)));
  return Polyhedron::from_constraints(dim, std::move(cs)).generators().lines;
}

BoxTranslateCone cone_of_box_translate(const Vector& x0, const Rational& delta) {
  if (delta <= 0) throw PreconditionError("cone_of_box_translate: delta must be positive");
  Rational sup = 0;
  for (const auto& x : x0) sup = std::max(sup, Rational(abs(x)));
  if (sup <= delta) throw PreconditionError("cone_of_box_translate: origin lies in x0 + delta*box");
  const std::size_t d = x0.size();
  BoxTranslateCone out{Polyhedron::empty(d), {}, false, false};
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Vector v = x0;
    for (std::size_t i = 0; i < d; ++i) v[i] += ((mask >> i) & 1U) ? delta : Rational(-delta);
    out.vertices.push_back(std::move(v));
  }
  out.cone = Polyhedron::cone(d, out.vertices);
  out.closed = out.cone.is_closed() && polar_positive(polar_positive(out.cone)).same_set(out.cone);
  out.pointed = is_pointed(out.cone);
  return out;
}

SlabClosure slab_cone_closure(const Vector& x0, const std::vector<Vector>& functionals, const Rational& eps,
                              const Vector& t) {
  const std::size_t n = x0.size();
  if (functionals.empty()) throw PreconditionError("slab_cone_closure: at least one functional is required");
  if (eps <= 0) throw PreconditionError("slab_cone_closure: eps must be positive");
  if (t.size() != n) throw MalformedInput("slab_cone_closure: functional dimension mismatch");
  if (dot(t, x0) <= 0) throw PreconditionError("slab_cone_closure: T(x0) must be positive");

  std::vector<Constraint> slab;
  for (const auto& ti : functionals) {
    if (ti.size() != n) throw MalformedInput("slab_cone_closure: functional dimension mismatch");
    slab.push_back(make_constraint(ti, Relation::LessEqual, eps + dot(ti, x0)));
  }
  SlabClosure out{Polyhedron::from_constraints(n, slab), Polyhedron::empty(n), {}, false, false};
  const Polyhedron bad = out.translate.add_constraints({make_constraint(t, Relation::LessEqual, Rational(0))});
  if (!bad.is_empty()) {
    throw PreconditionError("slab_cone_closure: {T <= 0} meets x0 + W");
  }
  out.closure = closed_conic_hull(PolySet(out.translate));

  std::vector<Vector> rows = functionals;
  rows.push_back(t);
  out.subspace_basis = null_space_basis(n, rows);
  out.subspace_contained = std::all_of(out.subspace_basis.begin(), out.subspace_basis.end(), [&](const Vector& b) {
    return out.closure.contains(b) && out.closure.contains(negate(b));
  });

  // cone(x0 + W) = {0} ∪ {y : exists s > 0, T_i(y) <= s (eps + T_i(x0))}.
  std::vector<Constraint> lifted;
  for (const auto& c : slab) {
    Vector a = c.coeffs;
    a.push_back(-c.rhs);
    lifted.push_back(make_constraint(std::move(a), Relation::LessEqual, Rational(0)));
  }
  Vector s_pos = zeros(n + 1);
  s_pos[n] = -1;
  lifted.push_back(make_constraint(std::move(s_pos), Relation::Less, Rational(0)));
  const Polyhedron cone_part = project(Polyhedron::from_constraints(n + 1, std::move(lifted)), iota_indices(0, n));
  std::vector<Constraint> recession;
  for (const auto& ti : functionals) recession.push_back(make_constraint(ti, Relation::LessEqual, Rational(0)));
  const PolySet rhs(n, {Polyhedron::from_constraints(n, recession), cone_part, Polyhedron::singleton(zeros(n))});
  out.decomposition_holds = PolySet(out.closure).same_set(rhs);
  return out;
}

}  // namespace procdual
