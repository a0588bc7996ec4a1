#include "procdual/poly_set.hpp"

#include <algorithm>

namespace procdual {

namespace {

std::vector<Polyhedron> simplify(std::vector<Polyhedron> pieces) {
  std::vector<Polyhedron> live;
  for (auto& p : pieces) {
    if (!p.is_empty()) live.push_back(std::move(p));
  }
  std::vector<bool> drop(live.size(), false);
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = 0; j < live.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (live[i].is_subset_of(live[j])) drop[i] = true;
    }
  }
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (!drop[i]) out.push_back(std::move(live[i]));
  }
  return out;
}

std::vector<Constraint> complement(const Constraint& c) {
  auto flip = [&](Relation rel) { return make_constraint(negate(c.coeffs), rel, -c.rhs); };
  switch (c.rel) {
    case Relation::LessEqual:
      return {flip(Relation::Less)};
    case Relation::Less:
      return {flip(Relation::LessEqual)};
    case Relation::Equal:
      return {make_constraint(c.coeffs, Relation::Less, c.rhs), flip(Relation::Less)};
  }
  return {};
}

}  // namespace

PolySet::PolySet(Polyhedron p) : dim_(p.dim()) {
  if (!p.is_empty()) pieces_.push_back(std::move(p));
}

PolySet::PolySet(std::size_t dim, std::vector<Polyhedron> pieces) : dim_(dim) {
  for (const auto& p : pieces) {
    if (p.dim() != dim) throw MalformedInput("PolySet: piece dimension mismatch");
  }
  pieces_ = simplify(std::move(pieces));
}

bool PolySet::contains(std::span<const Rational> x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Polyhedron& p) { return p.contains(x); });
}

bool PolySet::closure_contains(std::span<const Rational> x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Polyhedron& p) {
    return std::all_of(p.constraints().begin(), p.constraints().end(),
                       [&](const Constraint& c) { return c.relaxed().satisfied_by(x); });
  });
}

PolySet PolySet::unite(const PolySet& other) const {
  std::vector<Polyhedron> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return PolySet(dim_, std::move(all));
}

PolySet PolySet::intersect(const Polyhedron& p) const {
  std::vector<Polyhedron> out;
  for (const auto& q : pieces_) out.push_back(q.intersect(p));
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::intersect(const PolySet& other) const {
  std::vector<Polyhedron> out;
  for (const auto& a : pieces_) {
    for (const auto& b : other.pieces_) out.push_back(a.intersect(b));
  }
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::closure() const {
  std::vector<Polyhedron> out;
  for (const auto& p : pieces_) out.push_back(p.closure());
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::add_rays(const std::vector<Vector>& rays, const std::vector<Vector>& lines) const {
  std::vector<Polyhedron> out;
  for (const auto& p : pieces_) out.push_back(p.add_rays(rays, lines));
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::translate(std::span<const Rational> shift) const {
  std::vector<Polyhedron> out;
  for (const auto& p : pieces_) out.push_back(p.translate(shift));
  return PolySet(dim_, std::move(out));
}

PolySet PolySet::negated() const {
  std::vector<Polyhedron> out;
  for (const auto& p : pieces_) out.push_back(p.negated());
  return PolySet(dim_, std::move(out));
}

bool PolySet::is_subset_of(const Polyhedron& other) const {
  return std::all_of(pieces_.begin(), pieces_.end(), [&](const Polyhedron& p) { return p.is_subset_of(other); });
}

bool PolySet::is_subset_of(const PolySet& other) const {
  for (const auto& p : pieces_) {
    // Cheap exit: containment in a single piece.
    const bool single = std::any_of(other.pieces_.begin(), other.pieces_.end(),
                                    [&](const Polyhedron& q) { return p.is_subset_of(q); });
    if (single) continue;
    if (!difference(p, other).is_empty()) return false;
  }
  return true;
}

bool PolySet::same_set(const PolySet& other) const { return is_subset_of(other) && other.is_subset_of(*this); }

bool PolySet::is_convex() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (!convex_join(pieces_[i], pieces_[j]).is_subset_of(*this)) return false;
    }
  }
  return true;
}

Generators PolySet::all_generators() const {
  Generators g;
  for (const auto& p : pieces_) {
    const auto& s = p.generators();
    g.points.insert(g.points.end(), s.points.begin(), s.points.end());
    g.closure_points.insert(g.closure_points.end(), s.closure_points.begin(), s.closure_points.end());
    g.rays.insert(g.rays.end(), s.rays.begin(), s.rays.end());
    g.lines.insert(g.lines.end(), s.lines.begin(), s.lines.end());
  }
  return g;
}

Polyhedron PolySet::closed_hull() const {
  if (is_empty()) return Polyhedron::empty(dim_);
  Generators g = all_generators();
  for (auto& c : g.closure_points) g.points.push_back(std::move(c));
  g.closure_points.clear();
  return Polyhedron::from_generators(dim_, std::move(g));
}

PolySet project(const PolySet& s, const std::vector<std::size_t>& kept) {
  std::vector<Polyhedron> out;
  for (const auto& p : s.pieces()) out.push_back(project(p, kept));
  return PolySet(kept.size(), std::move(out));
}

PolySet difference(const Polyhedron& p, const Polyhedron& q) {
  if (p.is_empty()) return PolySet(p.dim());
  if (q.is_empty()) return PolySet(p);
  std::vector<Polyhedron> out;
  std::vector<Constraint> prefix;
  for (const auto& c : q.constraints()) {
    for (const auto& nc : complement(c)) {
      std::vector<Constraint> piece = prefix;
      piece.push_back(nc);
      out.push_back(p.add_constraints(piece));
    }
    prefix.push_back(c);
  }
  return PolySet(p.dim(), std::move(out));
}

PolySet difference(const Polyhedron& p, const PolySet& q) {
  std::vector<Polyhedron> rest{p};
  for (const auto& piece : q.pieces()) {
    std::vector<Polyhedron> next;
    for (const auto& r : rest) {
      auto d = difference(r, piece);
      next.insert(next.end(), d.pieces().begin(), d.pieces().end());
    }
    rest = std::move(next);
    if (rest.empty()) break;
  }
  return PolySet(p.dim(), std::move(rest));
}

PolySet convex_join(const Polyhedron& a, const Polyhedron& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw MalformedInput("convex_join: dimension mismatch");
  if (a.is_empty()) return PolySet(b);
  if (b.is_empty()) return PolySet(a);
  // Variables (x, u, lambda): u in lambda*a, x - u in (1 - lambda)*b.
  const std::size_t dim = 2 * n + 1;
  const std::size_t lam = 2 * n;
  std::vector<Constraint> cs;
  for (const auto& c : a.constraints()) {
    Constraint d;
    d.coeffs = zeros(dim);
    for (std::size_t i = 0; i < n; ++i) d.coeffs[n + i] = c.coeffs[i];
    d.coeffs[lam] = -c.rhs;
    d.rel = c.rel;
    d.rhs = 0;
    cs.push_back(std::move(d));
  }
  for (const auto& c : b.constraints()) {
    Constraint d;
    d.coeffs = zeros(dim);
    for (std::size_t i = 0; i < n; ++i) {
      d.coeffs[i] = c.coeffs[i];
      d.coeffs[n + i] = -c.coeffs[i];
    }
    d.coeffs[lam] = c.rhs;
    d.rel = c.rel;
    d.rhs = c.rhs;
    cs.push_back(std::move(d));
  }
  Vector lo = zeros(dim);
  lo[lam] = -1;
  Vector hi = zeros(dim);
  hi[lam] = 1;
  cs.push_back(make_constraint(lo, Relation::Less, Rational(0)));
  cs.push_back(make_constraint(hi, Relation::Less, Rational(1)));
  const Polyhedron lifted = Polyhedron::from_constraints(dim, std::move(cs));
  const Polyhedron middle = project(lifted, iota_indices(0, n));
  return PolySet(n, {a, b, middle});
}

}  // namespace procdual
