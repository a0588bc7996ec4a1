#pragma once

#include "procdual/poly_set.hpp"

#include <optional>

namespace procdual {

/// Convex polyhedral cone used as an ordering: y1 <= y2 iff y2 - y1 in K.
class OrderingCone {
 public:
  explicit OrderingCone(Polyhedron cone);
  static OrderingCone from_rays(std::size_t dim, const std::vector<Vector>& rays,
                                const std::vector<Vector>& lines = {});
  static OrderingCone orthant(std::size_t dim);

  std::size_t dim() const { return cone_.dim(); }
  const Polyhedron& cone() const { return cone_; }
  const Polyhedron& interior() const { return interior_; }
  bool pointed() const { return pointed_; }
  bool solid() const { return solid_; }
  bool proper() const { return proper_; }
  /// Extreme rays (meaningful for pointed cones).
  const std::vector<Vector>& rays() const { return cone_.generators().rays; }
  /// Sum of the extreme rays; an interior point when the cone is solid and pointed.
  Vector ray_sum() const;

 private:
  Polyhedron cone_;
  Polyhedron interior_;
  bool pointed_ = false;
  bool solid_ = false;
  bool proper_ = false;
};

struct ConeFlags {
  bool pointed;
  bool solid;
  bool proper;
};
ConeFlags cone_flags(const OrderingCone& k);

/// a ∩ (y0 - K) ⊆ y0 + K.
bool is_nondominated(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);
/// y0 ∈ cl(a) and nondominated by a.
bool is_nondominated_point(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);

/// y0 ∈ a and a ∩ (y0 - K) ⊆ y0 + K (equal to {y0} for pointed K).
bool is_minimal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);
/// y0 ∈ a and a ∩ (y0 - int K) = ∅. Throws PreconditionError unless K is solid.
bool is_weak_minimal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);
bool is_maximal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);
bool is_weak_maximal(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);

struct PosProperResult {
  bool proper = false;
  /// f > 0 on the nonzero elements of K and f(y0) <= f(y) on a.
  std::optional<Vector> functional;
};

/// Positive proper efficiency of y0 in a. Requires a pointed K.
PosProperResult is_pos_proper(std::span<const Rational> y0, const PolySet& a, const OrderingCone& k);

/// Generator points (and closure points lying in the set) of the pieces
/// of a that are minimal; sorted and unique.
std::vector<Vector> minimal_extreme_points(const PolySet& a, const OrderingCone& k);

/// Maximal counterpart of minimal_extreme_points.
std::vector<Vector> maximal_extreme_points(const PolySet& a, const OrderingCone& k);

}  // namespace procdual
