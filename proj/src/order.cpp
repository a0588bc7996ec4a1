#include "procdual/order.hpp"

#include "procdual/cones.hpp"

#include <algorithm>

namespace procdual {

OrderingCone::OrderingCone(Polyhedron cone) : cone_(std::move(cone)), interior_(cone_.interior()) {
  if (!is_cone(cone_)) throw MalformedInput("ordering cone: not a closed cone");
  pointed_ = is_pointed(cone_);
  solid_ = cone_.affine_dimension() == static_cast<int>(cone_.dim());
  proper_ = cone_.affine_dimension() > 0 && !cone_.is_universe();
}

OrderingCone OrderingCone::from_rays(std::size_t dim, const std::vector<Vector>& rays,
                                     const std::vector<Vector>& lines) {
  for (const auto& r : rays) {
    if (r.size() != dim) throw MalformedInput("ordering cone: ray dimension mismatch");
  }
  return OrderingCone(Polyhedron::cone(dim, rays, lines));
}

OrderingCone OrderingCone::orthant(std::size_t dim) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e = zeros(dim);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  return from_rays(dim, rays);
}

Vector OrderingCone::ray_sum() const {
  Vector s = zeros(dim());
  for (const auto& r : rays()) s = add(s, r);
  return s;
}

ConeFlags cone_flags(const OrderingCone& k) { return {k.pointed(), k.solid(), k.proper()}; }

namespace {

void check_dims(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  if (y0.size() != k.dim() || a.dim() != k.dim()) throw MalformedInput("order predicate: dimension mismatch");
}

Polyhedron shifted(const Polyhedron& c, std::span<const Rational> y0, bool negate_first) {
  return (negate_first ? c.negated() : c).translate(y0);
}

}  // namespace

bool is_nondominated(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  check_dims(y0, a, k);
  const PolySet below = a.intersect(shifted(k.cone(), y0, true));
  return below.is_subset_of(shifted(k.cone(), y0, false));
}

bool is_nondominated_point(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  return a.closure_contains(y0) && is_nondominated(y0, a, k);
}

bool is_minimal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  return a.contains(y0) && is_nondominated(y0, a, k);
}

bool is_maximal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  check_dims(y0, a, k);
  if (!a.contains(y0)) return false;
  const PolySet above = a.intersect(shifted(k.cone(), y0, false));
  return above.is_subset_of(shifted(k.cone(), y0, true));
}

bool is_weak_minimal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  check_dims(y0, a, k);
  if (!k.solid()) throw PreconditionError("weak minimality requires a solid ordering cone");
  return a.contains(y0) && a.intersect(shifted(k.interior(), y0, true)).is_empty();
}

bool is_weak_maximal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  check_dims(y0, a, k);
  if (!k.solid()) throw PreconditionError("weak maximality requires a solid ordering cone");
  return a.contains(y0) && a.intersect(shifted(k.interior(), y0, false)).is_empty();
}

PosProperResult is_pos_proper(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k) {
  check_dims(y0, a, k);
  if (!k.pointed()) throw PreconditionError("positive proper efficiency requires a pointed ordering cone");
  PosProperResult out;
  if (!a.contains(y0)) return out;
  const std::size_t n = k.dim();
  std::vector<Constraint> cs;
  for (const auto& r : k.rays()) cs.push_back(make_constraint(negate(r), Relation::Less, Rational(0)));
  const Generators g = a.all_generators();
  for (const auto* list : {&g.points, &g.closure_points}) {
    for (const auto& p : *list) {
      Vector d = subtract(p, y0);
      if (!is_zero(d)) cs.push_back(make_constraint(negate(d), Relation::LessEqual, Rational(0)));
    }
  }
  for (const auto& r : g.rays) cs.push_back(make_constraint(negate(r), Relation::LessEqual, Rational(0)));
  for (const auto& l : g.lines) cs.push_back(make_constraint(l, Relation::Equal, Rational(0)));
  const Polyhedron feasible = Polyhedron::from_constraints(n, std::move(cs));
  if (feasible.is_empty()) return out;
  // A cone without the origin: scale the barycentre to a primitive vector.
  Vector f = feasible.some_point();
  if (is_zero(f)) {
    const Polyhedron open = feasible.add_constraints({make_constraint(negate(k.ray_sum()), Relation::LessEqual,
                                                                      Rational(-1))});
    f = open.some_point();
  }
  out.proper = true;
  out.functional = primitive(f);
  return out;
}

namespace {

std::vector<Vector> extreme_candidates(const PolySet& a) {
  std::vector<Vector> cand;
  for (const auto& p : a.pieces()) {
    const auto& g = p.generators();
    cand.insert(cand.end(), g.points.begin(), g.points.end());
    for (const auto& c : g.closure_points) {
      if (a.contains(c)) cand.push_back(c);
    }
  }
  std::sort(cand.begin(), cand.end(), [](const Vector& x, const Vector& y) { return lex_less(x, y); });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  return cand;
}

}  // namespace

std::vector<Vector> minimal_extreme_points(const PolySet& a, const OrderingCone& k) {
  std::vector<Vector> out;
  for (auto& c : extreme_candidates(a)) {
    if (is_minimal(c, a, k)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Vector> maximal_extreme_points(const PolySet& a, const OrderingCone& k) {
  std::vector<Vector> out;
  for (auto& c : extreme_candidates(a)) {
    if (is_maximal(c, a, k)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace procdual
