#pragma once

#include "procdual/poly_set.hpp"

#include <vector>

namespace procdual {

/// w = M v + c for a lifted variable vector v.
struct AffineMap {
  std::vector<Vector> rows;  // one row (length = lifted dim) per coordinate of w
  Vector constant;

  /// Selects v[first], ..., v[first + count - 1].
  static AffineMap block(std::size_t dim, std::size_t first, std::size_t count);
  /// Concatenation of the coordinates of a and b.
  static AffineMap stack(const AffineMap& a, const AffineMap& b);
  AffineMap operator-(const AffineMap& other) const;
  AffineMap operator+(const Vector& shift) const;
};

/// Conjunction of membership constraints "M v + c ∈ S" over a lifted space;
/// unions multiply out into alternatives.
class Lift {
 public:
  explicit Lift(std::size_t dim) : dim_(dim), alternatives_(1) {}

  std::size_t dim() const { return dim_; }
  void require(const Polyhedron& s, const AffineMap& m);
  void require(const PolySet& s, const AffineMap& m);
  void require(const Constraint& c);

  std::vector<Polyhedron> polyhedra() const;
  PolySet project_onto(const std::vector<std::size_t>& kept) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Constraint>> alternatives_;
};

std::vector<Constraint> pull_back(const Polyhedron& s, const AffineMap& m);

}  // namespace procdual
