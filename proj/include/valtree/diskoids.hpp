#pragma once

#include "valtree/balls.hpp"
#include "valtree/newton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace valtree {

/// D(F, δ) = {c : v̄(F(c)) ∈ R(δ)} where v̄(F(c)) = lc_val + Σ_r v̄(c − r) over `roots`
/// (a conjugacy group for the K^h-irreducible factor, or every root of f).
/// R(δ) is "≥ γ" for δ = γ ∈ Γ, "> δ^L" for cuts, {∞} for Inf.
struct Diskoid {
  std::vector<PuiseuxElt> roots;
  Rational lc_val = 0;
  int e = 1;
  QuasiCut radius = QuasiCut::neg_inf();
  std::string to_string() const;
};

/// D(f, δ) taking every root of f (no grouping).
Diskoid diskoid_of_poly(const Poly& f, const QuasiCut& radius, const Rational& order = 16);

bool disk_member(const Diskoid& d, const PuiseuxElt& c);

/// The distance profile S_r(d) = Σ_{r'} min(d, v̄(r − r')) applied to a quasi-cut.
QuasiCut distance_profile(const std::vector<PuiseuxElt>& roots, std::size_t r, const QuasiCut& d);
/// S_r^{-1}: the radius ρ with D = ⋃_r B(r, ρ_r).
QuasiCut inverse_profile(const std::vector<PuiseuxElt>& roots, std::size_t r, const QuasiCut& d);
/// The balls B(r, ρ_r) whose union is the diskoid.
std::vector<PointedBall> skeleton(const Diskoid& d);

/// ⋃_σ σ(B) for a ball centered at a root of f; CenterNotRoot otherwise.
Diskoid orbit_to_diskoid(const PointedBall& b, const Poly& f, const Rational& order = 16);
/// Same, for the k-th root in group order.
Diskoid orbit_to_diskoid(const Poly& f, std::size_t root_index, const QuasiCut& radius,
                         const Rational& order = 16);

/// D ≤ E  ⟺  D ⊇ E and δ ≤ ε. Containment is decided on the skeletons; `samples`
/// random points of E are also checked against D (Error on disagreement).
bool disk_leq(const Diskoid& d, const Diskoid& e, int samples = 16, std::uint64_t seed = 1);

/// v_F(g) = v̄(g(r)), checked to agree on every root of the group.
RationalInf support_val(const RootGroup& group, const Poly& g);

/// A random point of B: center + u·t^β with β admitted by the radius.
PuiseuxElt sample_in_ball(const PointedBall& b, std::uint64_t& state);

}  // namespace valtree
