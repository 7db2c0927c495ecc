#pragma once

#include "valtree/balls.hpp"

#include <string>
#include <vector>

namespace valtree {

/// An approximation type stored by its canonical datum; the set of balls it stands
/// for (closed under enlargement) is reached through appr_member.
class ApprType {
 public:
  enum class Kind { Empty, Immediate, ResidueExt, ValueExt };

  static ApprType empty() { return ApprType(Kind::Empty); }
  static ApprType immediate(Nest n);
  /// closure of {B(a, γ)}
  static ApprType residue_ext(PuiseuxElt a, Rational gamma);
  /// closure of {B°(a, γ) | γ ∈ δ^L}
  static ApprType value_ext(PuiseuxElt a, QuasiCut delta);

  Kind kind() const { return kind_; }
  const PuiseuxElt& center() const { return center_; }
  const QuasiCut& cut() const { return cut_; }
  const Nest& nest() const { return nest_; }
  std::string kind_name() const;
  std::string to_string() const;

 private:
  explicit ApprType(Kind k) : kind_(k) {}
  Kind kind_;
  PuiseuxElt center_;
  QuasiCut cut_ = QuasiCut::neg_inf();
  Nest nest_;
};

/// Closed ball B(b, γ) (radius Elem(γ)) or open ball B°(b, γ) (radius Plus(γ)).
PointedBall closed_ball(const PuiseuxElt& b, const Rational& g);
PointedBall open_ball(const PuiseuxElt& b, const Rational& g);

Tri appr_member(const ApprType& a, const PointedBall& b, int depth = 64);

ApprType appr_from_ball(const PointedBall& b);
ApprType appr_from_nest(const Nest& n);

/// supp(A) as the cut whose left set it is.
QuasiCut appr_support(const ApprType& a);
/// "{q <= 1}", "{q < 1}", "empty", "all", "{q < real(...)}".
std::string support_string(const QuasiCut& supp);
/// A_γ, the closed ball of radius γ in A; GammaOutsideSupport unless γ ∈ supp(A).
PointedBall appr_at(const ApprType& a, const Rational& g);

enum class ApprClass { Immediate, ValueExtending, ResidueExtending };
const char* to_string(ApprClass c);
/// Tag from the datum, audited against membership (Error if an audit fails).
ApprClass appr_classify(const ApprType& a);

}  // namespace valtree
