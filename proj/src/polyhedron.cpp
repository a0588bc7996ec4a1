#include "procdual/polyhedron.hpp"

#include "procdual/double_description.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace procdual {

std::string_view relation_token(Relation rel) {
  switch (rel) {
    case Relation::LessEqual:
      return "<=";
    case Relation::Less:
      return "<";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

Relation parse_relation(std::string_view token) {
  if (token == "<=") return Relation::LessEqual;
  if (token == "<") return Relation::Less;
  if (token == "=") return Relation::Equal;
  throw MalformedInput("unknown relation token '" + std::string(token) + "'");
}

bool Constraint::satisfied_by(std::span<const Rational> x) const {
  const Rational lhs = dot(coeffs, x);
  switch (rel) {
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::Less:
      return lhs < rhs;
    case Relation::Equal:
      return lhs == rhs;
  }
  return false;
}

Constraint Constraint::relaxed() const {
  Constraint c = *this;
  if (c.rel == Relation::Less) c.rel = Relation::LessEqual;
  return c;
}

Constraint make_constraint(Vector coeffs, Relation rel, Rational rhs) {
  return Constraint{std::move(coeffs), rel, std::move(rhs)};
}

std::vector<std::size_t> iota_indices(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out(end - begin);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

namespace {

bool vector_less(const Vector& a, const Vector& b) { return lex_less(a, b); }

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end(), vector_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_dim(std::size_t dim, const Vector& v) {
  if (v.size() != dim) {
    throw MalformedInput("dimension mismatch: expected " + std::to_string(dim) + " entries, got " +
                         std::to_string(v.size()));
  }
}

// Homogenized cone in (x, t, eps) whose slice t = 1, eps > 0 is the set.
Generators generators_from_constraints(std::size_t dim, const std::vector<Constraint>& cs) {
  dd::ConeConstraints hom;
  for (const auto& c : cs) {
    check_dim(dim, c.coeffs);
    Vector row = negate(c.coeffs);
    row.push_back(c.rhs);
    row.push_back(c.rel == Relation::Less ? Rational(-1) : Rational(0));
    if (c.rel == Relation::Equal) {
      hom.equalities.push_back(std::move(row));
    } else {
      hom.inequalities.push_back(std::move(row));
    }
  }
  Vector eps_nonneg = zeros(dim + 2);
  eps_nonneg[dim + 1] = 1;
  Vector eps_below_t = zeros(dim + 2);
  eps_below_t[dim] = 1;
  eps_below_t[dim + 1] = -1;
  hom.inequalities.push_back(std::move(eps_nonneg));
  hom.inequalities.push_back(std::move(eps_below_t));

  const dd::ConeGenerators g = dd::generators_of(dim + 2, hom);
  Generators out;
  for (const auto& l : g.lines) out.lines.push_back(primitive(std::span(l).first(dim)));
  for (const auto& r : g.rays) {
    const Rational& t = r[dim];
    const Rational& e = r[dim + 1];
    Vector x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
    if (t == 0) {
      out.rays.push_back(primitive(x));
    } else if (e > 0) {
      out.points.push_back(scale(x, 1 / t));
    } else {
      out.closure_points.push_back(scale(x, 1 / t));
    }
  }
  return out;
}

struct Interpreted {
  std::vector<Constraint> constraints;
  bool empty = false;
};

Interpreted constraints_from_generators(std::size_t dim, const Generators& gens) {
  Interpreted out;
  if (gens.points.empty()) {
    out.empty = true;
    return out;
  }
  dd::ConeGenerators hom;
  auto lift = [&](const Vector& v, int t, int e) {
    check_dim(dim, v);
    Vector h = v;
    h.push_back(Rational(t));
    h.push_back(Rational(e));
    return h;
  };
  for (const auto& p : gens.points) hom.rays.push_back(lift(p, 1, 1));
  for (const auto& c : gens.closure_points) hom.rays.push_back(lift(c, 1, 0));
  for (const auto& r : gens.rays) hom.rays.push_back(lift(r, 0, 0));
  for (const auto& l : gens.lines) hom.lines.push_back(lift(l, 0, 0));
  Vector down = zeros(dim + 2);
  down[dim + 1] = -1;
  hom.rays.push_back(std::move(down));

  const dd::ConeConstraints cc = dd::constraints_of(dim + 2, hom);
  auto decode = [&](const Vector& row, Relation rel) {
    Constraint c;
    c.coeffs = negate(std::span(row).first(dim));
    c.rhs = row[dim];
    c.rel = rel;
    return c;
  };
  for (const auto& row : cc.equalities) {
    Constraint c = decode(row, Relation::Equal);
    if (!is_zero(c.coeffs)) out.constraints.push_back(std::move(c));
  }
  for (const auto& row : cc.inequalities) {
    Constraint c = decode(row, row[dim + 1] < 0 ? Relation::Less : Relation::LessEqual);
    if (!is_zero(c.coeffs)) out.constraints.push_back(std::move(c));
  }
  return out;
}

// Equalities to reduced row echelon form; inequalities reduced modulo them,
// scaled to primitive integers, deduplicated and sorted.
std::vector<Constraint> canonicalize(std::size_t dim, const std::vector<Constraint>& cs) {
  std::vector<Vector> eq;
  std::vector<Constraint> ineq;
  for (const auto& c : cs) {
    Vector row = c.coeffs;
    row.push_back(c.rhs);
    if (c.rel == Relation::Equal) {
      eq.push_back(std::move(row));
    } else {
      ineq.push_back(c);
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < eq.size(); ++col) {
    std::size_t sel = rank;
    while (sel < eq.size() && eq[sel][col] == 0) ++sel;
    if (sel == eq.size()) continue;
    std::swap(eq[rank], eq[sel]);
    const Rational inv = 1 / eq[rank][col];
    for (auto& x : eq[rank]) x *= inv;
    for (std::size_t r = 0; r < eq.size(); ++r) {
      if (r == rank || eq[r][col] == 0) continue;
      const Rational f = eq[r][col];
      for (std::size_t k = 0; k <= dim; ++k) eq[r][k] -= f * eq[rank][k];
    }
    pivots.push_back(col);
    ++rank;
  }
  eq.resize(rank);

  std::vector<Constraint> out;
  for (auto& row : eq) {
    Vector p = primitive(row);
    Constraint c;
    c.rhs = p.back();
    p.pop_back();
    c.coeffs = std::move(p);
    c.rel = Relation::Equal;
    out.push_back(std::move(c));
  }
  std::vector<Constraint> reduced;
  for (auto& c : ineq) {
    Vector row = c.coeffs;
    row.push_back(c.rhs);
    for (std::size_t r = 0; r < rank; ++r) {
      const Rational f = row[pivots[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k <= dim; ++k) row[k] -= f * eq[r][k];
    }
    if (is_zero(std::span(row).first(dim))) continue;
    Vector p = primitive(row);
    Constraint d;
    d.rhs = p.back();
    p.pop_back();
    d.coeffs = std::move(p);
    d.rel = c.rel;
    reduced.push_back(std::move(d));
  }
  auto key = [](const Constraint& c) { return std::tie(c.coeffs, c.rhs); };
  std::sort(reduced.begin(), reduced.end(), [&](const Constraint& a, const Constraint& b) {
    if (key(a) != key(b)) return key(a) < key(b);
    return a.rel == Relation::Less && b.rel != Relation::Less;
  });
  // Same hyperplane twice: the strict copy (sorted first) wins.
  reduced.erase(std::unique(reduced.begin(), reduced.end(),
                            [&](const Constraint& a, const Constraint& b) { return key(a) == key(b); }),
                reduced.end());
  for (auto& c : reduced) out.push_back(std::move(c));
  return out;
}

bool generators_satisfy(const Generators& g, const Constraint& c) {
  for (const auto& l : g.lines) {
    if (dot(c.coeffs, l) != 0) return false;
  }
  for (const auto& r : g.rays) {
    const Rational v = dot(c.coeffs, r);
    if (c.rel == Relation::Equal ? v != 0 : v > 0) return false;
  }
  for (const auto& q : g.closure_points) {
    const Rational v = dot(c.coeffs, q);
    if (c.rel == Relation::Equal ? v != c.rhs : v > c.rhs) return false;
  }
  for (const auto& p : g.points) {
    if (!c.satisfied_by(p)) return false;
  }
  return true;
}

// Drops constraints implied by the rest. Only needed when strict
// constraints are present: without them the dual facets are irredundant.
std::vector<Constraint> remove_redundant(std::size_t dim, std::vector<Constraint> cs) {
  const bool has_strict =
      std::any_of(cs.begin(), cs.end(), [](const Constraint& c) { return c.rel == Relation::Less; });
  if (!has_strict) return cs;
  std::vector<std::size_t> order(cs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return (cs[a].rel == Relation::Less) < (cs[b].rel == Relation::Less);
  });
  std::vector<bool> alive(cs.size(), true);
  for (std::size_t i : order) {
    if (cs[i].rel == Relation::Equal) continue;
    std::vector<Constraint> rest;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k != i && alive[k]) rest.push_back(cs[k]);
    }
    const Generators g = generators_from_constraints(dim, rest);
    if (generators_satisfy(g, cs[i])) alive[i] = false;
  }
  std::vector<Constraint> out;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (alive[k]) out.push_back(std::move(cs[k]));
  }
  return out;
}

Generators canonical_generators(std::size_t dim, const std::vector<Constraint>& cs) {
  Generators g = generators_from_constraints(dim, cs);
  std::vector<Vector> closure;
  for (auto& c : g.closure_points) {
    const bool inside = std::all_of(cs.begin(), cs.end(), [&](const Constraint& k) { return k.satisfied_by(c); });
    if (inside) {
      g.points.push_back(std::move(c));
    } else {
      closure.push_back(std::move(c));
    }
  }
  g.closure_points = std::move(closure);
  sort_unique(g.points);
  sort_unique(g.closure_points);
  sort_unique(g.rays);
  return g;
}

}  // namespace

Polyhedron Polyhedron::build(std::size_t dim, const Generators& raw) {
  Interpreted in = constraints_from_generators(dim, raw);
  if (in.empty) return empty(dim);
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.constraints_ = canonicalize(dim, remove_redundant(dim, canonicalize(dim, in.constraints)));
  p.gens_ = canonical_generators(dim, p.constraints_);
  p.closed_ = p.gens_.closure_points.empty();
  return p;
}

Polyhedron Polyhedron::from_constraints(std::size_t dim, std::vector<Constraint> constraints) {
  for (const auto& c : constraints) check_dim(dim, c.coeffs);
  return build(dim, generators_from_constraints(dim, constraints));
}

Polyhedron Polyhedron::from_generators(std::size_t dim, Generators gens) {
  for (const auto* list : {&gens.points, &gens.closure_points, &gens.rays, &gens.lines}) {
    for (const auto& v : *list) check_dim(dim, v);
  }
  return build(dim, gens);
}

Polyhedron Polyhedron::universe(std::size_t dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.gens_.points.push_back(zeros(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e = zeros(dim);
    e[i] = 1;
    p.gens_.lines.push_back(std::move(e));
  }
  return p;
}

Polyhedron Polyhedron::empty(std::size_t dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = true;
  p.constraints_.push_back(make_constraint(zeros(dim), Relation::LessEqual, Rational(-1)));
  return p;
}

Polyhedron Polyhedron::singleton(const Vector& point) {
  Generators g;
  g.points.push_back(point);
  return from_generators(point.size(), std::move(g));
}

Polyhedron Polyhedron::cone(std::size_t dim, const std::vector<Vector>& rays, const std::vector<Vector>& lines) {
  Generators g;
  g.points.push_back(zeros(dim));
  g.rays = rays;
  g.lines = lines;
  return from_generators(dim, std::move(g));
}

bool Polyhedron::contains(std::span<const Rational> x) const {
  if (empty_) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint& c) { return c.satisfied_by(x); });
}

int Polyhedron::affine_dimension() const {
  if (empty_) return -1;
  const auto eqs = std::count_if(constraints_.begin(), constraints_.end(),
                                 [](const Constraint& c) { return c.rel == Relation::Equal; });
  return static_cast<int>(dim_) - static_cast<int>(eqs);
}

Polyhedron Polyhedron::closure() const {
  if (empty_ || closed_) return *this;
  Generators g = gens_;
  for (auto& c : g.closure_points) g.points.push_back(std::move(c));
  g.closure_points.clear();
  return from_generators(dim_, std::move(g));
}

Polyhedron Polyhedron::interior() const {
  if (empty_ || affine_dimension() < static_cast<int>(dim_)) return empty(dim_);
  std::vector<Constraint> cs = constraints_;
  for (auto& c : cs) c.rel = Relation::Less;
  return from_constraints(dim_, std::move(cs));
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.dim_ != dim_) throw MalformedInput("intersect: dimension mismatch");
  if (empty_ || other.empty_) return empty(dim_);
  std::vector<Constraint> cs = constraints_;
  cs.insert(cs.end(), other.constraints_.begin(), other.constraints_.end());
  return from_constraints(dim_, std::move(cs));
}

Polyhedron Polyhedron::add_constraints(const std::vector<Constraint>& extra) const {
  if (empty_) return *this;
  std::vector<Constraint> cs = constraints_;
  cs.insert(cs.end(), extra.begin(), extra.end());
  return from_constraints(dim_, std::move(cs));
}

Polyhedron Polyhedron::add_rays(const std::vector<Vector>& rays, const std::vector<Vector>& lines) const {
  if (empty_) return *this;
  Generators g = gens_;
  g.rays.insert(g.rays.end(), rays.begin(), rays.end());
  g.lines.insert(g.lines.end(), lines.begin(), lines.end());
  return from_generators(dim_, std::move(g));
}

Polyhedron Polyhedron::translate(std::span<const Rational> shift) const {
  if (empty_) return *this;
  Generators g = gens_;
  for (auto& p : g.points) p = add(p, shift);
  for (auto& c : g.closure_points) c = add(c, shift);
  return from_generators(dim_, std::move(g));
}

Polyhedron Polyhedron::negated() const {
  if (empty_) return *this;
  Generators g = gens_;
  for (auto* list : {&g.points, &g.closure_points, &g.rays}) {
    for (auto& v : *list) v = negate(v);
  }
  return from_generators(dim_, std::move(g));
}

bool Polyhedron::satisfies(const Constraint& c) const {
  if (empty_) return true;
  return generators_satisfy(gens_, c);
}

bool Polyhedron::is_subset_of(const Polyhedron& other) const {
  if (other.dim_ != dim_) throw MalformedInput("subset test: dimension mismatch");
  if (empty_) return true;
  if (other.empty_) return false;
  return std::all_of(other.constraints_.begin(), other.constraints_.end(),
                     [&](const Constraint& c) { return satisfies(c); });
}

bool Polyhedron::same_set(const Polyhedron& other) const {
  return is_subset_of(other) && other.is_subset_of(*this);
}

Vector Polyhedron::some_point() const {
  if (empty_) throw PreconditionError("some_point of an empty polyhedron");
  Vector s = zeros(dim_);
  for (const auto& p : gens_.points) s = add(s, p);
  return scale(s, Rational(1) / static_cast<long>(gens_.points.size()));
}

namespace {

Constraint combine(const Constraint& pos, const Constraint& neg, std::size_t j) {
  // pos.coeffs[j] > 0 > neg.coeffs[j]
  const Rational a = -neg.coeffs[j];
  const Rational b = pos.coeffs[j];
  Constraint c;
  c.coeffs = add(scale(pos.coeffs, a), scale(neg.coeffs, b));
  c.coeffs[j] = 0;
  c.rhs = pos.rhs * a + neg.rhs * b;
  c.rel = (pos.rel == Relation::Less || neg.rel == Relation::Less) ? Relation::Less : Relation::LessEqual;
  return c;
}

}  // namespace

Polyhedron project(const Polyhedron& p, const std::vector<std::size_t>& kept) {
  if (kept.empty()) throw PreconditionError("project: empty index set");
  for (std::size_t k : kept) {
    if (k >= p.dim()) throw PreconditionError("project: index out of range");
  }
  if (p.is_empty()) return Polyhedron::empty(kept.size());
  const std::size_t n = p.dim();
  std::vector<bool> keep(n, false);
  for (std::size_t k : kept) keep[k] = true;
  std::vector<std::size_t> todo;
  for (std::size_t j = 0; j < n; ++j) {
    if (!keep[j]) todo.push_back(j);
  }

  Polyhedron cur = p;
  while (!todo.empty() && !cur.is_empty()) {
    const auto& cs = cur.constraints();
    // An equality involving an eliminated variable is used for substitution.
    std::size_t var = n;
    std::size_t eq_idx = cs.size();
    for (std::size_t i = 0; i < cs.size() && var == n; ++i) {
      if (cs[i].rel != Relation::Equal) continue;
      for (std::size_t j : todo) {
        if (cs[i].coeffs[j] != 0) {
          var = j;
          eq_idx = i;
          break;
        }
      }
    }
    std::vector<Constraint> next;
    if (var != n) {
      const Constraint& e = cs[eq_idx];
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i == eq_idx) continue;
        Constraint c = cs[i];
        if (c.coeffs[var] != 0) {
          const Rational f = c.coeffs[var] / e.coeffs[var];
          c.coeffs = subtract(c.coeffs, scale(e.coeffs, f));
          c.coeffs[var] = 0;
          c.rhs -= f * e.rhs;
        }
        next.push_back(std::move(c));
      }
    } else {
      std::size_t best_pairs = 0;
      for (std::size_t j : todo) {
        std::size_t np = 0, nn = 0;
        for (const auto& c : cs) {
          if (c.coeffs[j] > 0) ++np;
          if (c.coeffs[j] < 0) ++nn;
        }
        if (var == n || np * nn < best_pairs) {
          var = j;
          best_pairs = np * nn;
        }
      }
      std::vector<const Constraint*> pos, neg;
      for (const auto& c : cs) {
        if (c.coeffs[var] > 0) {
          pos.push_back(&c);
        } else if (c.coeffs[var] < 0) {
          neg.push_back(&c);
        } else {
          next.push_back(c);
        }
      }
      for (const auto* a : pos) {
        for (const auto* b : neg) next.push_back(combine(*a, *b, var));
      }
    }
    todo.erase(std::find(todo.begin(), todo.end(), var));
    cur = Polyhedron::from_constraints(n, std::move(next));
  }
  if (cur.is_empty()) return Polyhedron::empty(kept.size());
  std::vector<Constraint> out;
  for (const auto& c : cur.constraints()) {
    Constraint d;
    d.rel = c.rel;
    d.rhs = c.rhs;
    for (std::size_t k : kept) d.coeffs.push_back(c.coeffs[k]);
    out.push_back(std::move(d));
  }
  return Polyhedron::from_constraints(kept.size(), std::move(out));
}

Polyhedron linear_image(const Polyhedron& p, const std::vector<Vector>& matrix) {
  if (p.is_empty()) return Polyhedron::empty(matrix.size());
  auto apply = [&](const Vector& v) {
    Vector out;
    out.reserve(matrix.size());
    for (const auto& row : matrix) out.push_back(dot(row, v));
    return out;
  };
  Generators g;
  const auto& src = p.generators();
  for (const auto& v : src.points) g.points.push_back(apply(v));
  for (const auto& v : src.closure_points) g.closure_points.push_back(apply(v));
  for (const auto& v : src.rays) {
    Vector w = apply(v);
    if (!is_zero(w)) g.rays.push_back(std::move(w));
  }
  for (const auto& v : src.lines) {
    Vector w = apply(v);
    if (!is_zero(w)) g.lines.push_back(std::move(w));
  }
  return Polyhedron::from_generators(matrix.size(), std::move(g));
}

Polyhedron project_by_generators(const Polyhedron& p, const std::vector<std::size_t>& kept) {
  if (kept.empty()) throw PreconditionError("project: empty index set");
  std::vector<Vector> m;
  for (std::size_t k : kept) {
    Vector row = zeros(p.dim());
    row.at(k) = 1;
    m.push_back(std::move(row));
  }
  return linear_image(p, m);
}

std::vector<Constraint> embed_constraints(const Polyhedron& p, std::size_t dim,
                                          const std::vector<std::size_t>& positions) {
  if (positions.size() != p.dim()) throw MalformedInput("embed: position count mismatch");
  std::vector<Constraint> out;
  for (const auto& c : p.constraints()) {
    Constraint d;
    d.coeffs = zeros(dim);
    for (std::size_t i = 0; i < positions.size(); ++i) d.coeffs[positions[i]] = c.coeffs[i];
    d.rel = c.rel;
    d.rhs = c.rhs;
    out.push_back(std::move(d));
  }
  return out;
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
  const std::size_t dim = p.dim() + q.dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(dim);
  std::vector<Constraint> cs = embed_constraints(p, dim, iota_indices(0, p.dim()));
  auto more = embed_constraints(q, dim, iota_indices(p.dim(), dim));
  cs.insert(cs.end(), more.begin(), more.end());
  return Polyhedron::from_constraints(dim, std::move(cs));
}

}  // namespace procdual
