#include "procdual/duality.hpp"

#include "procdual/geometry_io.hpp"

namespace procdual {

bool phi_member(const PolySet& psi, const OrderingCone& yplus, std::span<const Rational> y) {
  return is_nondominated_point(y, psi, yplus);
}

bool phi_member(const ProgramInstance& inst, const PolyhedralProcess& delta, std::span<const Rational> y) {
  return phi_member(psi_set(inst, delta), inst.yplus(), y);
}

Certificate weak_duality_check(const ProgramInstance& inst, std::span<const Rational> y0,
                               const PolyhedralProcess& delta, std::span<const Rational> y1) {
  Certificate c;
  c.title = "weak duality y0 = (" + format_vector(y0, ",") + "), y1 = (" + format_vector(y1, ",") + ")";
  if (!is_nondominated_for_program(inst, y0)) {
    c.precondition_error = "y0 is not a nondominated point of P(0)";
    return c;
  }
  if (!phi_member(inst, delta, y1)) {
    c.precondition_error = "y1 is not in Phi(Delta)";
    return c;
  }
  const Vector diff = subtract(y1, y0);
  c.add("no y0 < y1", "y1 − y0 ∉ int Y+", !inst.yplus().interior().contains(diff));
  c.witness("y1 - y0", format_vector(diff, ","));
  return c;
}

StrongDualityResult strong_duality_witness(const ProgramInstance& inst, std::span<const Rational> y0) {
  StrongDualityResult out;
  Certificate& c = out.certificate;
  c.title = "strong duality at y0 = (" + format_vector(y0, ",") + ")";
  const SlaterResult slater = slater_check(inst);
  if (!slater.holds) {
    c.precondition_error = "Slater condition fails";
    return out;
  }
  c.witness("Slater x1", format_vector(*slater.x1, ","));
  try {
    const SeparatorCone s = separator_cone(inst, y0);
    c.add("separator formulas agree", "polar of the tangent cone = defining inequalities", s.formulas_agree);
    const DualPair pair = pick_dual_pair(s);
    c.witness("z*", format_vector(pair.z_star, ","));
    c.witness("y*", format_vector(pair.y_star, ","));
    out.multiplier = build_multiplier(pair, inst.yplus());
  } catch (const PreconditionError& e) {
    c.precondition_error = e.what();
    return out;
  }
  const BuiltMultiplier& b = *out.multiplier;
  c.witness("delta", format_rational(b.delta));
  c.witness("Delta0", to_text(b.process.graph));
  c.add("Delta0 in Gamma", "T(g) > 0 for every nonzero g ∈ Graph(Δ0)", b.strict_containment);
  c.add("Delta0 pointed", "Graph(Δ0) ∩ −Graph(Δ0) = {0}", b.process.pointed);
  c.add("Delta0 full domain", "Dom(Δ0) = Z", b.process.domain_full);
  const PolySet psi = psi_set(inst, b.process);
  c.add("y0 in Phi(Delta0)", "y0 ∈ cl Ψ(Δ0) and Ψ(Δ0) ∩ (y0 − Y+) ⊆ y0 + Y+", phi_member(psi, inst.yplus(), y0));
  if (const auto x0 = find_preimage(inst, y0)) {
    c.witness("x0", format_vector(*x0, ","));
    c.add("y0 minimal in P[Delta0]", "y0 ∈ Ψ(Δ0) and nondominated by Ψ(Δ0)",
          psi.contains(y0) && is_nondominated(y0, psi, inst.yplus()));
    const PolySet inc = multiplier_inclusion_set(inst, b.process, *x0);
    const Polyhedron lineality = inst.yplus().cone().intersect(inst.yplus().cone().negated());
    c.add("multiplier inclusion", "Δ0(G(x0) + Z+) ∩ (−Y+) ⊆ Y+ ∩ (−Y+)", inc.is_subset_of(lineality));
  }
  return out;
}

}  // namespace procdual
