#pragma once

#include "procdual/program.hpp"
#include "procdual/report.hpp"

#include <optional>

namespace procdual {

/// A process Z ⇉ Y given by its graph, a cone in Z×Y.
struct PolyhedralProcess {
  Polyhedron graph;
  std::size_t nz = 0;
  std::size_t ny = 0;
  bool closed = false;
  bool convex = true;
  bool pointed = false;
  bool domain_full = false;
};

/// Flags are computed from the graph. Throws MalformedInput if the graph
/// is not a cone of dimension nz + ny.
PolyhedralProcess make_process(Polyhedron graph, std::size_t nz);

/// Δ(z) for a single z, and Δ(S) = ∪_{z∈S} Δ(z).
PolySet process_image(const PolyhedralProcess& p, std::span<const Rational> z);
PolySet process_image(const PolyhedralProcess& p, const PolySet& s);

struct SeparatorCone {
  Polyhedron cone;  // in Z*×Y*, coordinates (z*, y*)
  Vector y0;
  Polyhedron tangent_cone;  // cl cone(Graph(V+Y₊) - (0, y0))
  bool formulas_agree = false;
};

/// The positive polar of the tangent cone of Graph(V+Y₊) at (0, y0),
/// checked against the defining inequalities. PreconditionError if y0 is
/// not a nondominated point of P(0).
SeparatorCone separator_cone(const ProgramInstance& inst, std::span<const Rational> y0);

struct DualPair {
  Vector z_star;
  Vector y_star;
};

/// Sum of the extreme rays of the separator cone.
DualPair pick_dual_pair(const SeparatorCone& s);
DualPair pick_dual_pair(const Polyhedron& cone, std::size_t nz);

struct BuiltMultiplier {
  PolyhedralProcess process;
  Vector t;        // (-z*, y*)
  Vector center;   // (0, y₊)
  Rational t0;
  Rational delta;
  std::vector<Vector> vertices;
  bool strict_containment = false;  // t(g) > 0 for every nonzero g in the graph
};

BuiltMultiplier build_multiplier(const DualPair& pair, const OrderingCone& yplus);

/// Ψ(Δ) = ∪_{x∈Ω} F(x) + Δ(G(x) + Z₊).
PolySet psi_set(const ProgramInstance& inst, const PolyhedralProcess& delta);

/// Δ(G(x0) + Z₊) ∩ (-Y₊).
PolySet multiplier_inclusion_set(const ProgramInstance& inst, const PolyhedralProcess& delta, std::span<const Rational> x0);

/// Nondominated point of P(0): y0 ∈ cl V(0) and V(0) ∩ (y0 - Y₊) ⊆ y0 + Y₊.
bool is_nondominated_for_program(const ProgramInstance& inst, std::span<const Rational> y0);

/// Clauses: y0 ∈ cl Ψ(Δ); y0 nondominated by Ψ(Δ); and when y0 ∈ F(x0)
/// for a feasible x0, minimality in P[Δ] and multiplier inclusion.
Certificate verify_lagrange_multiplier(const ProgramInstance& inst, const PolyhedralProcess& delta,
                                       std::span<const Rational> y0);

/// The −S_{(z*,y*)} process: graph {(z, y) : <z*, z> <= <y*, y>}.
PolyhedralProcess minus_s_process(const DualPair& pair);

}  // namespace procdual
