#pragma once

#include "procdual/rational.hpp"

#include <vector>

namespace procdual::dd {

/// H-description of a homogeneous cone: {y : e·y = 0 for e in equalities,
/// a·y >= 0 for a in inequalities}.
struct ConeConstraints {
  std::vector<Vector> equalities;
  std::vector<Vector> inequalities;
};

/// V-description of a homogeneous cone: span(lines) + cone(rays).
struct ConeGenerators {
  std::vector<Vector> lines;
  std::vector<Vector> rays;
};

/// Minimal generators of the cone. Lines form a basis of the lineality
/// space; rays are the primitive integer extreme rays of the pointed part,
/// sorted lexicographically.
ConeGenerators generators_of(std::size_t dim, const ConeConstraints& constraints);

/// Minimal constraints of the cone generated by `gens`, obtained by running
/// the same algorithm on the dual cone.
ConeConstraints constraints_of(std::size_t dim, const ConeGenerators& gens);

}  // namespace procdual::dd
