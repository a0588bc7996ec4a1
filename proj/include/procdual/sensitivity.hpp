#pragma once

#include "procdual/multiplier.hpp"

namespace procdual {

enum class AdjointDirection {
  /// Graph in Z×Y  →  {(y*, z*) : <z*, g_z> <= <y*, g_y> for all g}.
  Forward,
  /// Graph in Y*×Z*  →  {(z, y) : <z*, z> <= <y*, y> for all (y*, z*)}.
  Reverse,
};

/// The adjoint as a process. In the result, `nz` is the dimension of the
/// first block (Y* for Forward, Z for Reverse) and `ny` of the second.
PolyhedralProcess adjoint(const PolyhedralProcess& p, AdjointDirection direction);

/// Swaps the two coordinate blocks: (a, b) -> (b, a).
Polyhedron swap_blocks(const Polyhedron& p, std::size_t first);

struct LagrangeProcess {
  PolyhedralProcess process;  // Graph(L) ⊂ Z×Y, computed as the adjoint of the separator cone
  Vector y0;
  Polyhedron tangent_cone;    // cl cone(Graph(V+Y₊) − (0, y0))
  Polyhedron reflected;       // {(z, y) : (−z, y) ∈ tangent_cone}
  bool routes_agree = false;
};

/// Throws PreconditionError unless y0 is a nondominated point of P(0) and
/// Y₊ is pointed.
LagrangeProcess lagrange_process(const ProgramInstance& inst, std::span<const Rational> y0);

/// {y : (z, y) ∈ cl cone(graph − base)}.
PolySet contingent_derivative_slice(const PolySet& graph, std::span<const Rational> base, std::span<const Rational> z);

Certificate verify_derivative_identity(const ProgramInstance& inst, std::span<const Rational> y0,
                                       const std::vector<Vector>& z_samples);

struct OracleStep {
  Rational h;
  std::vector<Vector> quotients;  // (m − y0)/h over the minimal extreme points m of V(h z)
};

struct OracleResult {
  bool stable = false;
  std::vector<Vector> limit;
  std::vector<OracleStep> trace;
};

/// Difference quotients of the marginal map for h = 1, 1/2, ..., 2^-12;
/// stable once three consecutive quotient sets agree.
OracleResult marginal_derivative_oracle(const ProgramInstance& inst, std::span<const Rational> y0,
                                        std::span<const Rational> z);

/// Grid {p/q : q <= 4, |p/q| <= 1} per coordinate.
std::vector<Vector> domination_grid(std::size_t nz);

/// V(z) ⊆ Min(V(z)) + Y₊, checked on generators against the minimal
/// extreme points.
bool domination_holds_at(const ProgramInstance& inst, std::span<const Rational> z);

struct SensitivityReport {
  Certificate audit;
  Certificate comparison;
  std::vector<std::pair<Vector, OracleResult>> oracle;
  bool hypotheses_certified = false;
  std::string certified_by;  // "(a)", "(b)", "(c)" or empty
};

SensitivityReport sensitivity_report(const ProgramInstance& inst, std::span<const Rational> y0,
                                     const std::vector<Vector>& z_samples);

struct ScalarRecovery {
  Certificate certificate;
  std::optional<Rational> ell0;
  Vector y0;
};

/// One-dimensional Y and Z with the nonnegative ordering, single-valued F
/// and G. Throws PreconditionError when the shape requirements fail.
ScalarRecovery scalar_recovery_check(const ProgramInstance& inst, const std::vector<Vector>& z_samples);

/// True iff every x has at most one image under the graph (variables x then y).
bool is_single_valued(const PolySet& graph, std::size_t nx);

}  // namespace procdual
