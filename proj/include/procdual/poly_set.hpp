#pragma once

#include "procdual/polyhedron.hpp"

#include <vector>

namespace procdual {

/// Finite union of NNC polyhedra of a common dimension. Empty pieces and
/// pieces contained in another piece are dropped on construction.
class PolySet {
 public:
  explicit PolySet(std::size_t dim) : dim_(dim) {}
  explicit PolySet(Polyhedron p);
  PolySet(std::size_t dim, std::vector<Polyhedron> pieces);

  std::size_t dim() const { return dim_; }
  const std::vector<Polyhedron>& pieces() const { return pieces_; }

  bool is_empty() const { return pieces_.empty(); }
  bool contains(std::span<const Rational> x) const;
  bool closure_contains(std::span<const Rational> x) const;

  PolySet unite(const PolySet& other) const;
  PolySet intersect(const Polyhedron& p) const;
  PolySet intersect(const PolySet& other) const;
  PolySet closure() const;
  PolySet add_rays(const std::vector<Vector>& rays, const std::vector<Vector>& lines = {}) const;
  PolySet translate(std::span<const Rational> shift) const;
  PolySet negated() const;

  bool is_subset_of(const PolySet& other) const;
  bool is_subset_of(const Polyhedron& other) const;
  bool same_set(const PolySet& other) const;
  /// Exact convexity test: every pairwise convex join lies in the union.
  bool is_convex() const;

  /// Union of all generator systems (closure points kept as closure points).
  Generators all_generators() const;
  /// Smallest closed polyhedron containing the union.
  Polyhedron closed_hull() const;

 private:
  std::size_t dim_;
  std::vector<Polyhedron> pieces_;
};

PolySet project(const PolySet& s, const std::vector<std::size_t>& kept);

/// p \ q as a union of NNC polyhedra.
PolySet difference(const Polyhedron& p, const Polyhedron& q);
PolySet difference(const Polyhedron& p, const PolySet& q);

/// conv(a ∪ b), exact (not the closure and not the NNC generator hull).
PolySet convex_join(const Polyhedron& a, const Polyhedron& b);

}  // namespace procdual
