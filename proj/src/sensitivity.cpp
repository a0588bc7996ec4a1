#include "procdual/sensitivity.hpp"

#include "procdual/cones.hpp"
#include "procdual/geometry_io.hpp"
#include "procdual/lift.hpp"

#include <algorithm>
#include <set>

namespace procdual {

namespace {

Vector concat(std::span<const Rational> a, std::span<const Rational> b) {
  Vector v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

std::vector<Vector> identity_rows(std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = zeros(n);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

// (z, y) -> (−z, y)
Polyhedron reflect_first(const Polyhedron& p, std::size_t nz) {
  auto rows = identity_rows(p.dim());
  for (std::size_t i = 0; i < nz; ++i) rows[i][i] = -1;
  return linear_image(p, rows);
}

std::string points_text(const std::vector<Vector>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", (" : "(") + format_vector(pts[i], ",") + ")";
  return s + "}";
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end(), [](const Vector& a, const Vector& b) { return lex_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Polyhedron swap_blocks(const Polyhedron& p, std::size_t first) {
  const std::size_t n = p.dim();
  std::vector<Vector> rows;
  for (std::size_t i = first; i < n; ++i) {
    Vector r = zeros(n);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < first; ++i) {
    Vector r = zeros(n);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return linear_image(p, rows);
}

PolyhedralProcess adjoint(const PolyhedralProcess& p, AdjointDirection direction) {
  const std::size_t a = p.nz, b = p.ny, n = a + b;
  const auto& g = p.graph.generators();
  std::vector<Constraint> cs;
  // Forward: generator (g_z, g_y), variables (y*, z*): <z*, g_z> - <y*, g_y> <= 0.
  // Reverse: generator (y*, z*), variables (z, y):   <z*, z>  - <y*, y>  <= 0.
  auto row = [&](const Vector& v) {
    Vector r;
    if (direction == AdjointDirection::Forward) {
      r = concat(negate(std::span(v).subspan(a)), std::span(v).subspan(0, a));
    } else {
      r = concat(std::span(v).subspan(a), negate(std::span(v).subspan(0, a)));
    }
    return r;
  };
  for (const auto& r : g.rays) cs.push_back(make_constraint(row(r), Relation::LessEqual, Rational(0)));
  for (const auto& l : g.lines) cs.push_back(make_constraint(row(l), Relation::Equal, Rational(0)));
  for (const auto* list : {&g.points, &g.closure_points}) {
    for (const auto& q : *list) {
      if (!is_zero(q)) cs.push_back(make_constraint(row(q), Relation::LessEqual, Rational(0)));
    }
  }
  return make_process(Polyhedron::from_constraints(n, std::move(cs)), direction == AdjointDirection::Forward ? b : b);
}

LagrangeProcess lagrange_process(const ProgramInstance& inst, std::span<const Rational> y0) {
  if (!inst.yplus().pointed()) throw PreconditionError("the Lagrange process requires a pointed Y+");
  const SeparatorCone s = separator_cone(inst, y0);
  const std::size_t nz = inst.nz(), ny = inst.ny();
  // Separator cone in (z*, y*) order; the reverse adjoint expects (y*, z*).
  PolyhedralProcess dual = make_process(swap_blocks(s.cone, nz), ny);
  LagrangeProcess out{adjoint(dual, AdjointDirection::Reverse), s.y0, s.tangent_cone, reflect_first(s.tangent_cone, nz),
                      false};
  out.process.nz = nz;
  out.process.ny = ny;
  out.routes_agree = out.process.graph.same_set(out.reflected);
  return out;
}

PolySet contingent_derivative_slice(const PolySet& graph, std::span<const Rational> base, std::span<const Rational> z) {
  return slice(PolySet(cone_hull_closure(graph, base)), z);
}

Certificate verify_derivative_identity(const ProgramInstance& inst, std::span<const Rational> y0,
                                       const std::vector<Vector>& z_samples) {
  Certificate c;
  c.title = "derivative identity at y0 = (" + format_vector(y0, ",") + ")";
  if (!slater_check(inst).holds) {
    c.precondition_error = "Slater condition fails";
    return c;
  }
  if (!is_minimal(y0, value_set(inst, zeros(inst.nz())), inst.yplus())) {
    c.precondition_error = "y0 is not a minimal point of P(0)";
    return c;
  }
  LagrangeProcess lp = [&] {
    try {
      return lagrange_process(inst, y0);
    } catch (const PreconditionError& e) {
      c.precondition_error = e.what();
      throw;
    }
  }();
  const std::size_t nz = inst.nz();
  const Vector base = concat(zeros(nz), y0);
  const PolySet& graph = value_graph(inst).graph_v_plus;
  // Left side: adjoint of the separator cone. Right side: tangent cone of the graph.
  const Polyhedron tangent = cone_hull_closure(graph, base);
  c.add("graph level", "Graph(L(−·)) = cl cone(Graph(V+Y+) − (0,y0))",
        reflect_first(lp.process.graph, nz).same_set(tangent));
  c.witness("Graph(L)", to_text(lp.process.graph));
  for (const auto& z : z_samples) {
    const PolySet left = process_image(lp.process, negate(z));
    const PolySet right = contingent_derivative_slice(graph, base, z);
    c.add("z = " + format_vector(z, ","), "L(−z) = D(V+Y+)(0,y0)(z)", left.same_set(right));
  }
  return c;
}

OracleResult marginal_derivative_oracle(const ProgramInstance& inst, std::span<const Rational> y0,
                                        std::span<const Rational> z) {
  OracleResult out;
  Rational h = 1;
  int agree = 0;
  for (int k = 0; k <= 12; ++k, h /= 2) {
    OracleStep step{h, {}};
    for (const auto& m : marginal_min_points(inst, scale(z, h))) step.quotients.push_back(scale(subtract(m, y0), 1 / h));
    sort_unique(step.quotients);
    agree = (!out.trace.empty() && out.trace.back().quotients == step.quotients) ? agree + 1 : 1;
    out.trace.push_back(std::move(step));
    if (agree >= 3) {
      out.stable = true;
      out.limit = out.trace.back().quotients;
      break;
    }
  }
  return out;
}

std::vector<Vector> domination_grid(std::size_t nz) {
  std::set<Rational> values;
  for (long q = 1; q <= 4; ++q) {
    for (long p = -q; p <= q; ++p) values.insert(Rational(p, q));
  }
  std::vector<Vector> grid{Vector{}};
  for (std::size_t i = 0; i < nz; ++i) {
    std::vector<Vector> next;
    for (const auto& g : grid) {
      for (const auto& v : values) {
        Vector w = g;
        w.push_back(v);
        next.push_back(std::move(w));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

bool domination_holds_at(const ProgramInstance& inst, std::span<const Rational> z) {
  const PolySet v = value_set(inst, z);
  const OrderingCone& k = inst.yplus();
  const auto mins = minimal_extreme_points(v, k);
  for (const auto& piece : v.pieces()) {
    const auto& g = piece.generators();
    for (const auto& r : g.rays) {
      if (!k.cone().contains(r)) return false;
    }
    for (const auto& l : g.lines) {
      if (!k.cone().contains(l) || !k.cone().contains(negate(l))) return false;
    }
    for (const auto* list : {&g.points, &g.closure_points}) {
      for (const auto& p : *list) {
        const bool covered = std::any_of(mins.begin(), mins.end(),
                                         [&](const Vector& m) { return k.cone().contains(subtract(p, m)); });
        if (!covered) return false;
      }
    }
  }
  return true;
}

SensitivityReport sensitivity_report(const ProgramInstance& inst, std::span<const Rational> y0,
                                     const std::vector<Vector>& z_samples) {
  SensitivityReport out;
  Certificate& audit = out.audit;
  audit.title = "sensitivity hypotheses at y0 = (" + format_vector(y0, ",") + ")";
  const PolySet v0 = value_set(inst, zeros(inst.nz()));
  if (!is_minimal(y0, v0, inst.yplus())) {
    audit.precondition_error = "y0 is not a minimal point of P(0)";
    return out;
  }
  if (!slater_check(inst).holds) {
    audit.precondition_error = "Slater condition fails";
    return out;
  }
  LagrangeProcess lp = [&] {
    try {
      return lagrange_process(inst, y0);
    } catch (const PreconditionError& e) {
      audit.precondition_error = e.what();
      throw;
    }
  }();

  audit.note("Y+ ∩ S_Y compact", "unit sphere section of Y+ is compact", true, "automatic in finite dimension");
  std::string failed_at;
  for (const auto& z : domination_grid(inst.nz())) {
    if (!domination_holds_at(inst, z)) {
      failed_at = format_vector(z, ",");
      break;
    }
  }
  const bool domination = failed_at.empty();
  audit.note("domination (sampled)", "V(z) ⊆ M(z) + Y+ on the grid |z| <= 1, denominators <= 4", domination,
             domination ? "sampled, not proved" : "fails at z = (" + failed_at + ")");
  const bool a = lp.process.pointed;
  audit.note("condition (a)", "Graph(L) pointed (has a bounded base)", a);
  const bool b = inst.ny() == 1 && inst.yplus().cone().same_set(Polyhedron::cone(1, {Vector{Rational(1)}}));
  audit.note("condition (b)", "dim Y = 1 and Y+ = R+", b);
  const auto pos = is_pos_proper(y0, v0, inst.yplus());
  audit.note("condition (c)", "y0 ∈ Pos(V(0))", pos.proper, pos.functional ? "f = (" + format_vector(*pos.functional, ",") + ")" : "");
  audit.note("condition (d)", "Henig condition", false, "never certified");
  out.certified_by = a ? "(a)" : b ? "(b)" : pos.proper ? "(c)" : "";
  out.hypotheses_certified = domination && !out.certified_by.empty();
  audit.note("hypotheses certified", "domination and one of (a)-(c)", out.hypotheses_certified,
             out.certified_by.empty() ? "hypotheses not certified" : "by condition " + out.certified_by);

  Certificate& cmp = out.comparison;
  cmp.title = "Min DM(0,y0)(z) = Min L(−z)";
  const Vector base = concat(zeros(inst.nz()), y0);
  for (const auto& z : z_samples) {
    OracleResult oracle = marginal_derivative_oracle(inst, y0, z);
    const PolySet lz = process_image(lp.process, negate(z));
    const auto mins = minimal_extreme_points(lz, inst.yplus());
    bool trace_in_cone = true;
    for (const auto& step : oracle.trace) {
      for (const auto& q : step.quotients) trace_in_cone &= lp.tangent_cone.contains(concat(z, q));
    }
    const std::string key = "z = " + format_vector(z, ",");
    cmp.add(key + " quotients in tangent cone", "(z, q) ∈ cl cone(Graph(V+Y+) − (0,y0))", trace_in_cone);
    const std::string detail = "oracle " + (oracle.stable ? points_text(oracle.limit) : std::string("inconclusive")) +
                               ", Min L(−z) extreme points " + points_text(mins);
    bool match = oracle.stable;
    if (match) {
      for (const auto& q : oracle.limit) match &= is_minimal(q, lz, inst.yplus());
      for (const auto& m : mins) match &= std::find(oracle.limit.begin(), oracle.limit.end(), m) != oracle.limit.end();
    }
    if (out.hypotheses_certified && oracle.stable) {
      cmp.add(key, "oracle limit = Min L(−z)", match, detail);
    } else {
      cmp.note(key, "oracle limit = Min L(−z)", match, detail);
    }
    out.oracle.emplace_back(z, std::move(oracle));
  }
  // L(0) ∩ (−Y+) = {0} when L is itself a multiplier.
  const Certificate as_multiplier = verify_lagrange_multiplier(inst, lp.process, y0);
  if (as_multiplier.passed()) {
    const PolySet meet = process_image(lp.process, zeros(inst.nz())).intersect(inst.yplus().cone().negated());
    cmp.add("L(0) ∩ (−Y+)", "L(0) ∩ (−Y+) = {0}", meet.same_set(PolySet(Polyhedron::singleton(zeros(inst.ny())))));
  } else {
    cmp.note("L is a multiplier", "L passes the multiplier clauses", false);
  }
  return out;
}

bool is_single_valued(const PolySet& graph, std::size_t nx) {
  const std::size_t ny = graph.dim() - nx, dim = nx + 2 * ny;
  const AffineMap x = AffineMap::block(dim, 0, nx);
  Lift lift(dim);
  lift.require(graph, AffineMap::stack(x, AffineMap::block(dim, nx, ny)));
  lift.require(graph, AffineMap::stack(x, AffineMap::block(dim, nx + ny, ny)));
  for (std::size_t i = 0; i < ny; ++i) {
    Vector row = zeros(dim);
    row[nx + i] = 1;
    row[nx + ny + i] = -1;
    const Constraint apart = make_constraint(std::move(row), Relation::Less, Rational(0));
    for (const auto& p : lift.polyhedra()) {
      if (!p.add_constraints({apart}).is_empty()) return false;
    }
  }
  return true;
}

ScalarRecovery scalar_recovery_check(const ProgramInstance& inst, const std::vector<Vector>& z_samples) {
  const Polyhedron half_line = Polyhedron::cone(1, {Vector{Rational(1)}});
  if (inst.ny() != 1 || inst.nz() != 1) throw PreconditionError("scalar recovery needs dim Y = dim Z = 1");
  if (!inst.yplus().cone().same_set(half_line) || !inst.zplus().cone().same_set(half_line)) {
    throw PreconditionError("scalar recovery needs Y+ = Z+ = R+");
  }
  if (!is_single_valued(inst.graph_f(), inst.nx()) || !is_single_valued(inst.graph_g(), inst.nx())) {
    throw PreconditionError("scalar recovery needs single-valued F and G");
  }
  const auto mins = marginal_min_points(inst, Vector{Rational(0)});
  if (mins.size() != 1) throw PreconditionError("scalar recovery needs a unique minimal value of P(0)");

  ScalarRecovery out;
  out.y0 = mins.front();
  Certificate& c = out.certificate;
  c.title = "scalar recovery at y0 = " + format_vector(out.y0, ",");
  const LagrangeProcess lp = lagrange_process(inst, out.y0);
  c.witness("Graph(L)", to_text(lp.process.graph));
  // Graph(L) = {(z, y) : y >= l0 z} has a single inequality a z + b y <= 0 with b < 0.
  const auto& cs = lp.process.graph.constraints();
  if (cs.size() == 1 && cs[0].rel == Relation::LessEqual && cs[0].coeffs[1] < 0) {
    out.ell0 = -cs[0].coeffs[0] / cs[0].coeffs[1];
  }
  c.add("L is a half-plane", "Graph(L) = {(z,y) : y >= l0 z}", out.ell0.has_value(),
        out.ell0 ? "" : "graph is not of the form y >= l0 z");
  if (!out.ell0) return out;
  c.witness("l0", format_rational(*out.ell0));
  for (const auto& z : z_samples) {
    const Vector expected{-*out.ell0 * z[0]};
    const OracleResult oracle = marginal_derivative_oracle(inst, out.y0, z);
    const auto mins_l = minimal_extreme_points(process_image(lp.process, negate(z)), inst.yplus());
    const std::string key = "z = " + format_vector(z, ",");
    c.add(key + " oracle", "DM(0,y0)(z) = {−l0 z}", oracle.stable && oracle.limit == std::vector<Vector>{expected},
          oracle.stable ? points_text(oracle.limit) : "oracle inconclusive");
    c.add(key + " Lagrange", "Min L(−z) = {−l0 z}", mins_l == std::vector<Vector>{expected}, points_text(mins_l));
  }
  return out;
}

}  // namespace procdual
