#include "valtree/apprtype.hpp"

#include "valtree/errors.hpp"

namespace valtree {

ApprType ApprType::immediate(Nest n) {
  ApprType a(Kind::Immediate);
  a.nest_ = std::move(n);
  return a;
}

ApprType ApprType::residue_ext(PuiseuxElt c, Rational gamma) {
  ApprType a(Kind::ResidueExt);
  a.center_ = std::move(c);
  a.cut_ = QuasiCut::elem(gamma);
  return a;
}

ApprType ApprType::value_ext(PuiseuxElt c, QuasiCut delta) {
  if (delta.is_elem() || delta.is_inf()) throw DomainError("value-extending type needs a cut, got " + delta.to_string());
  if (delta.kind() == QuasiCut::Kind::NegInf) return empty();
  ApprType a(Kind::ValueExt);
  a.center_ = std::move(c);
  a.cut_ = std::move(delta);
  return a;
}

std::string ApprType::kind_name() const {
  switch (kind_) {
    case Kind::Empty: return "Empty";
    case Kind::Immediate: return "Immediate";
    case Kind::ResidueExt: return "ResidueExt";
    case Kind::ValueExt: return "ValueExt";
  }
  return "";
}

std::string ApprType::to_string() const {
  switch (kind_) {
    case Kind::Empty: return "Empty";
    case Kind::Immediate: return "Immediate(" + nest_.to_string() + ")";
    case Kind::ResidueExt: return "ResidueExt(" + closed_ball(center_, cut_.value()).to_string() + ")";
    case Kind::ValueExt: return "ValueExt(" + center_.to_string() + ", " + cut_.to_string() + ")";
  }
  return "";
}

PointedBall closed_ball(const PuiseuxElt& b, const Rational& g) { return {b, QuasiCut::elem(g)}; }
PointedBall open_ball(const PuiseuxElt& b, const Rational& g) { return {b, QuasiCut::plus(g)}; }

namespace {

const Rational& ball_gamma(const PointedBall& b) {
  auto k = b.radius.kind();
  if (k != QuasiCut::Kind::Elem && k != QuasiCut::Kind::Plus)
    throw DomainError("approximation types take closed or open balls with radius in Gamma, got " + b.to_string());
  return b.radius.value();
}

std::vector<Rational> rationals_below(const QuasiCut& d, int count) {
  std::vector<Rational> out;
  switch (d.kind()) {
    case QuasiCut::Kind::Elem:
    case QuasiCut::Kind::Plus:
      for (int k = 0; k < count; ++k) out.push_back(d.value() - Rational(k, k + 1));
      break;
    case QuasiCut::Kind::Minus:
      for (int k = 0; k < count; ++k) out.push_back(d.value() - Rational(1, k + 1));
      break;
    case QuasiCut::Kind::Real: {
      RealAlgebraic r = d.algebraic();
      for (int k = 0; k < count; ++k) {
        out.push_back(r.lo());
        r = r.refined((r.hi() - r.lo()) / 2);
      }
      break;
    }
    case QuasiCut::Kind::InfMinus:
    case QuasiCut::Kind::Inf:
      for (int k = 0; k < count; ++k) out.push_back(Rational(3 * k - count));
      break;
    case QuasiCut::Kind::NegInf: break;
  }
  return out;
}

}  // namespace

Tri appr_member(const ApprType& a, const PointedBall& b, int depth) {
  const Rational& g = ball_gamma(b);
  switch (a.kind()) {
    case ApprType::Kind::Empty: return Tri::No;
    case ApprType::Kind::ResidueExt:
      return ball_superset(b, closed_ball(a.center(), a.cut().value())) ? Tri::Yes : Tri::No;
    case ApprType::Kind::ValueExt:
      // B ⊇ B°(a, γ) for some γ ∈ δ^L  ⟺  a ∈ B and its radius lies in δ^L
      return in_left(g, a.cut()) && contains(b, a.center()) ? Tri::Yes : Tri::No;
    case ApprType::Kind::Immediate: return ball_below_nest(b, a.nest(), depth);
  }
  return Tri::Unknown;
}

ApprType appr_from_ball(const PointedBall& b) {
  switch (b.radius.kind()) {
    case QuasiCut::Kind::NegInf: return ApprType::empty();
    case QuasiCut::Kind::Elem: return ApprType::residue_ext(b.center, b.radius.value());
    case QuasiCut::Kind::Inf: throw DomainError("the radius inf has no approximation type");
    default: return ApprType::value_ext(b.center, b.radius);
  }
}

ApprType appr_from_nest(const Nest& n) { return ApprType::immediate(n); }

QuasiCut appr_support(const ApprType& a) {
  switch (a.kind()) {
    case ApprType::Kind::Empty: return QuasiCut::neg_inf();
    case ApprType::Kind::ResidueExt: return QuasiCut::plus(a.cut().value());
    case ApprType::Kind::ValueExt: return a.cut();
    case ApprType::Kind::Immediate: return a.nest().support_cut();
  }
  return QuasiCut::neg_inf();
}

std::string support_string(const QuasiCut& s) {
  switch (s.kind()) {
    case QuasiCut::Kind::NegInf: return "empty";
    case QuasiCut::Kind::InfMinus:
    case QuasiCut::Kind::Inf: return "all";
    case QuasiCut::Kind::Elem:
    case QuasiCut::Kind::Plus: return "{q <= " + to_string(s.value()) + "}";
    case QuasiCut::Kind::Minus: return "{q < " + to_string(s.value()) + "}";
    case QuasiCut::Kind::Real: return "{q < " + s.to_string() + "}";
  }
  return "";
}

PointedBall appr_at(const ApprType& a, const Rational& g) {
  if (!in_left(g, appr_support(a)))
    throw GammaOutsideSupport(to_string(g) + " is outside " + support_string(appr_support(a)));
  if (a.kind() != ApprType::Kind::Immediate) return closed_ball(a.center(), g);
  int i = 0;
  while (a.nest().radius(i) < g) ++i;
  return closed_ball(a.nest().center(i), g);
}

const char* to_string(ApprClass c) {
  switch (c) {
    case ApprClass::Immediate: return "Immediate";
    case ApprClass::ValueExtending: return "ValueExtending";
    case ApprClass::ResidueExtending: return "ResidueExtending";
  }
  return "";
}

ApprClass appr_classify(const ApprType& a) {
  switch (a.kind()) {
    case ApprType::Kind::Empty: return ApprClass::ValueExtending;
    case ApprType::Kind::ResidueExt: {
      const Rational& g = a.cut().value();
      if (appr_member(a, closed_ball(a.center(), g)) != Tri::Yes ||
          appr_member(a, open_ball(a.center(), g)) != Tri::No)
        throw Error("residue-extending audit failed for " + a.to_string());
      return ApprClass::ResidueExtending;
    }
    case ApprType::Kind::ValueExt: {
      for (const Rational& g : rationals_below(a.cut(), 5)) {
        PointedBall at = appr_at(a, g);
        if (appr_member(a, open_ball(at.center, g)) != Tri::Yes)
          throw Error("value-extending audit failed at " + to_string(g) + " for " + a.to_string());
      }
      return ApprClass::ValueExtending;
    }
    case ApprType::Kind::Immediate:
      for (int i = 0; i < 6; ++i)
        if (a.nest().escape(a.nest().center(i)) <= i) throw Error("nest center escapes its own ball");
      return ApprClass::Immediate;
  }
  return ApprClass::ValueExtending;
}

}  // namespace valtree
