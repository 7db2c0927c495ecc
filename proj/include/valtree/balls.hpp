#pragma once

#include "valtree/cuts.hpp"
#include "valtree/puiseux.hpp"

#include <optional>
#include <string>

namespace valtree {

/// B•(a, δ): the ball together with the radius it was built from.
struct PointedBall {
  PuiseuxElt center;
  QuasiCut radius;
  std::string to_string() const;
};

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

/// c ∈ B(a, δ). Decided from a lower bound on v̄(c − a) when c is truncated
/// and the bound already suffices; IndeterminateValuation otherwise.
bool contains(const PointedBall& b, const PuiseuxElt& c);
bool ball_eq(const PointedBall& b, const PointedBall& c);
/// B(a,δ) ⊇ B(b,ε) and δ ≤ ε.
bool pointed_leq(const PointedBall& b, const PointedBall& c);
/// under(B) ⊇ under(C), ignoring the pointed radii.
bool ball_superset(const PointedBall& b, const PointedBall& c);

/// The canonical family of nests with empty intersection:
///   center_i = offset + Σ_{n=2}^{k} scale·t^{shift + 1 − 1/n},
///   radius_i = shift + 1 − 1/(k+1),   k = i + 2 + skip.
/// Radii increase to shift + 1 while exponent denominators grow without bound,
/// so no Puiseux element lies in every ball.
class Nest {
 public:
  struct Params {
    Rational scale = 1;
    Rational shift = 0;
    PuiseuxElt offset;
    int skip = 0;
  };

  Nest() = default;
  explicit Nest(Params p);
  static Nest canonical() { return Nest(Params{}); }

  const Params& params() const { return p_; }
  PuiseuxElt center(int i) const;
  Rational radius(int i) const;
  PointedBall ball(int i) const { return {center(i), QuasiCut::elem(radius(i))}; }

  /// First index i with c ∉ B_i.
  int escape(const PuiseuxElt& c) const;
  /// sup of the radii as a quasi-cut: (shift+1)⁻.
  QuasiCut support_cut() const { return QuasiCut::minus(p_.shift + 1); }

  std::string to_string() const;
  friend bool operator==(const Nest& a, const Nest& b);

 private:
  Params p_;
};

/// Strict descent B_{i+1} ⊊ B_i for i + 1 < depth; throws DescentViolation.
bool nest_check(const Nest& n, int depth);
/// Each B_i (i < depth) of one nest contains a ball of the other and vice versa.
bool nest_equiv(const Nest& n, const Nest& m, int depth);
/// Some B_i ⊆ under(B). Exact via the escape index of B's center; Unknown only when
/// that index cannot be decided at the center's precision.
Tri ball_below_nest(const PointedBall& b, const Nest& n, int depth);

}  // namespace valtree
