#pragma once

#include "procdual/multiplier.hpp"

namespace procdual {

/// y ∈ Φ(Δ): y ∈ cl Ψ(Δ) and Ψ(Δ) ∩ (y − Y₊) ⊆ y + Y₊.
bool phi_member(const ProgramInstance& inst, const PolyhedralProcess& delta, std::span<const Rational> y);
bool phi_member(const PolySet& psi, const OrderingCone& yplus, std::span<const Rational> y);

/// Checks y1 − y0 ∉ int Y₊. Precondition failures (y0 not nondominated for
/// P(0), y1 not in Φ(Δ)) are reported separately from a violation.
Certificate weak_duality_check(const ProgramInstance& inst, std::span<const Rational> y0,
                               const PolyhedralProcess& delta, std::span<const Rational> y1);

struct StrongDualityResult {
  std::optional<BuiltMultiplier> multiplier;
  Certificate certificate;
};

/// Builds Δ₀ from the separator cone at y0 and certifies y0 ∈ Φ(Δ₀).
StrongDualityResult strong_duality_witness(const ProgramInstance& inst, std::span<const Rational> y0);

}  // namespace procdual
