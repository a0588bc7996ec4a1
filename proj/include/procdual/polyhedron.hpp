#pragma once

#include "procdual/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace procdual {

enum class Relation { LessEqual, Less, Equal };

std::string_view relation_token(Relation rel);
Relation parse_relation(std::string_view token);

/// coeffs · x  rel  rhs
struct Constraint {
  Vector coeffs;
  Relation rel = Relation::LessEqual;
  Rational rhs = 0;

  bool satisfied_by(std::span<const Rational> x) const;
  /// The same constraint with `<` relaxed to `<=`.
  Constraint relaxed() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

Constraint make_constraint(Vector coeffs, Relation rel, Rational rhs);

/// Generator description of an NNC polyhedron:
/// { sum l_i p_i + sum m_j c_j + sum n_k r_k + line part : l, m, n >= 0,
///   sum l + sum m = 1, sum l > 0 }.
/// Closure points belong to the closure only; the closure of the set is
/// obtained by reclassifying them as points.
struct Generators {
  std::vector<Vector> points;
  std::vector<Vector> closure_points;
  std::vector<Vector> rays;
  std::vector<Vector> lines;

  friend bool operator==(const Generators&, const Generators&) = default;
};

/// A not-necessarily-closed convex polyhedron in Q^n with both constraint
/// and generator descriptions, kept consistent and canonical. Immutable.
class Polyhedron {
 public:
  static Polyhedron from_constraints(std::size_t dim, std::vector<Constraint> constraints);
  static Polyhedron from_generators(std::size_t dim, Generators gens);
  static Polyhedron universe(std::size_t dim);
  static Polyhedron empty(std::size_t dim);
  static Polyhedron singleton(const Vector& point);
  /// Closed cone generated by `rays` (apex at the origin).
  static Polyhedron cone(std::size_t dim, const std::vector<Vector>& rays,
                         const std::vector<Vector>& lines = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Generators& generators() const { return gens_; }

  bool is_empty() const { return empty_; }
  bool is_universe() const { return !empty_ && constraints_.empty(); }
  /// True iff every closure point already belongs to the set.
  bool is_closed() const { return closed_; }
  bool is_bounded() const { return gens_.rays.empty() && gens_.lines.empty(); }
  bool contains(std::span<const Rational> x) const;
  /// Affine dimension (-1 for the empty set).
  int affine_dimension() const;

  Polyhedron closure() const;
  /// Interior relative to the ambient space (empty unless full-dimensional).
  Polyhedron interior() const;
  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron add_constraints(const std::vector<Constraint>& extra) const;
  /// Minkowski sum with cone(rays) + span(lines).
  Polyhedron add_rays(const std::vector<Vector>& rays, const std::vector<Vector>& lines = {}) const;
  Polyhedron translate(std::span<const Rational> shift) const;
  Polyhedron negated() const;

  /// this ⊆ other
  bool is_subset_of(const Polyhedron& other) const;
  bool satisfies(const Constraint& c) const;
  bool same_set(const Polyhedron& other) const;

  /// A point of the set: the barycentre of the generator points.
  Vector some_point() const;

  /// Structural equality of the canonical descriptions.
  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.dim_ == b.dim_ && a.constraints_ == b.constraints_ && a.gens_ == b.gens_;
  }

 private:
  Polyhedron() = default;
  static Polyhedron build(std::size_t dim, const Generators& raw_gens);

  std::size_t dim_ = 0;
  std::vector<Constraint> constraints_;
  Generators gens_;
  bool empty_ = true;
  bool closed_ = true;
};

/// Fourier-Motzkin projection onto `kept` (in the given order), with strict
/// inequalities propagated. Eliminates the variable with the fewest
/// positive/negative pairs first and minimizes after every step.
Polyhedron project(const Polyhedron& p, const std::vector<std::size_t>& kept);

/// Projection computed as the image of the generators (independent route).
Polyhedron project_by_generators(const Polyhedron& p, const std::vector<std::size_t>& kept);

/// Image under x -> M x (rows of M), via generators.
Polyhedron linear_image(const Polyhedron& p, const std::vector<Vector>& matrix);

/// Cartesian product p × q.
Polyhedron product(const Polyhedron& p, const Polyhedron& q);

/// Constraint system of p with variables placed at `positions` inside a
/// space of dimension `dim` (positions[i] is where variable i of p goes).
std::vector<Constraint> embed_constraints(const Polyhedron& p, std::size_t dim,
                                          const std::vector<std::size_t>& positions);

std::vector<std::size_t> iota_indices(std::size_t begin, std::size_t end);

}  // namespace procdual
