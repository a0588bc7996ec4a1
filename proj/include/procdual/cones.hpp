#pragma once

#include "procdual/poly_set.hpp"

#include <vector>

namespace procdual {

/// Homogeneous polyhedron: contains the origin and is closed under
/// positive scaling.
bool is_cone(const Polyhedron& p);

/// True iff c ∩ -c = {0}.
bool is_pointed(const Polyhedron& c);

/// {phi : phi(x) >= 0 for all x in c}. Depends only on cl(c).
Polyhedron polar_positive(const Polyhedron& c);

/// cl(cone(s - apex)) for a convex set s (given as a union of pieces);
/// throws PreconditionError when apex is outside cl(s).
Polyhedron cone_hull_closure(const PolySet& s, std::span<const Rational> apex);
Polyhedron cone_hull_closure(const Polyhedron& p, std::span<const Rational> apex);

/// cl(cone(s)) for a convex s, with the origin adjoined.
Polyhedron closed_conic_hull(const PolySet& s);

/// Every nonzero element g of the cone satisfies t(g) > 0.
bool strictly_positive_on(const Polyhedron& cone, std::span<const Rational> t);

/// Nonzero vectors spanning the null space of `rows`.
std::vector<Vector> null_space_basis(std::size_t dim, const std::vector<Vector>& rows);

struct BoxTranslateCone {
  Polyhedron cone;
  /// The 2^d vertices of x0 + delta * [-1, 1]^d, used as generators.
  std::vector<Vector> vertices;
  bool closed = false;   // equals its double polar
  bool pointed = false;
};

/// cone(x0 + delta * box) for the unit box of the infinity norm. Throws
/// PreconditionError when delta <= 0 or the origin lies in the translate.
BoxTranslateCone cone_of_box_translate(const Vector& x0, const Rational& delta);

struct SlabClosure {
  Polyhedron translate;        // x0 + W
  Polyhedron closure;          // cl(cone(x0 + W))
  std::vector<Vector> subspace_basis;  // basis of ∩ ker(T_i) ∩ ker(T)
  bool subspace_contained = false;
  /// cl(cone(x0 + W)) = ∩{T_i <= 0} ∪ cone(x0 + W), checked exactly.
  bool decomposition_holds = false;
};

/// W = ∩_i {T_i(x) <= eps}. Requires at least one functional, eps > 0,
/// T(x0) > 0 and {T <= 0} ∩ (x0 + W) = ∅; otherwise PreconditionError.
SlabClosure slab_cone_closure(const Vector& x0, const std::vector<Vector>& functionals, const Rational& eps,
                              const Vector& t);

}  // namespace procdual
