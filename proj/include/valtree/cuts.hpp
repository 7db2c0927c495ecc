#pragma once

#include "valtree/qpoly.hpp"
#include "valtree/rational.hpp"

#include <compare>
#include <memory>
#include <string>

namespace valtree {

/// An irrational real algebraic number: the unique root of `poly` in the
/// open interval (lo, hi). Comparisons are exact (sign evaluation plus
/// bisection); equality of two numbers is decided through a polynomial gcd.
class RealAlgebraic {
 public:
  /// Validates: exactly one root in (lo, hi), neither endpoint a root,
  /// and that root irrational. Throws DomainError otherwise.
  RealAlgebraic(QPoly poly, Rational lo, Rational hi);

  const QPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Same number with an isolating interval of width < `width`.
  RealAlgebraic refined(const Rational& width) const;

  /// The number m·r + g (m ≠ 0).
  RealAlgebraic affine(const Rational& m, const Rational& g) const;

  std::strong_ordering compare(const Rational& q) const;
  std::strong_ordering compare(const RealAlgebraic& other) const;

 private:
  struct Unchecked {};
  RealAlgebraic(QPoly poly, QPoly sqfree, Rational lo, Rational hi, Unchecked);
  RealAlgebraic bisected() const;

  QPoly poly_;    // as supplied (rendered form)
  QPoly sqfree_;  // squarefree part used for sign tests
  Rational lo_, hi_;
  int sign_lo_;
};

/// A quasi-cut in Γ = ℚ, extended by the radius ∞.
///
/// Totally ordered: NegInf < … < Minus(γ) < Elem(γ) < Plus(γ) < … < InfMinus < Inf,
/// with RealCut(r) placed at the irrational r.
class QuasiCut {
 public:
  enum class Kind { NegInf, Minus, Elem, Plus, Real, InfMinus, Inf };

  static QuasiCut neg_inf() { return QuasiCut(Kind::NegInf); }
  static QuasiCut minus(const Rational& g) { return QuasiCut(Kind::Minus, g); }
  static QuasiCut elem(const Rational& g) { return QuasiCut(Kind::Elem, g); }
  static QuasiCut plus(const Rational& g) { return QuasiCut(Kind::Plus, g); }
  static QuasiCut inf_minus() { return QuasiCut(Kind::InfMinus); }
  static QuasiCut inf() { return QuasiCut(Kind::Inf); }
  static QuasiCut real(RealAlgebraic r);
  static QuasiCut real(const QPoly& p, const Rational& lo, const Rational& hi);

  Kind kind() const { return kind_; }
  bool is_elem() const { return kind_ == Kind::Elem; }
  bool is_inf() const { return kind_ == Kind::Inf; }
  /// A cut proper or improper: neither Elem nor Inf.
  bool is_cut() const { return kind_ != Kind::Elem && kind_ != Kind::Inf; }
  bool is_improper() const { return kind_ == Kind::NegInf || kind_ == Kind::InfMinus; }
  /// γ for Minus/Elem/Plus.
  const Rational& value() const;
  const RealAlgebraic& algebraic() const;

  /// Image under the increasing or decreasing affine map y ↦ m·y + g.
  QuasiCut affine(const Rational& m, const Rational& g) const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const QuasiCut& a, const QuasiCut& b);
  friend bool operator==(const QuasiCut& a, const QuasiCut& b) { return (a <=> b) == 0; }

 private:
  explicit QuasiCut(Kind k, Rational g = 0) : kind_(k), value_(std::move(g)) {}

  Kind kind_;
  Rational value_;
  std::shared_ptr<const RealAlgebraic> real_;
};

/// γ ∈ δ^L. For Inf every γ is in the left set.
bool in_left(const Rational& g, const QuasiCut& d);
inline bool in_right(const Rational& g, const QuasiCut& d) { return !in_left(g, d); }

/// Total order on quasi-cuts.
std::strong_ordering qcut_cmp(const QuasiCut& a, const QuasiCut& b);

/// δ^R has no minimum: RealCut, γ⁺ (Γ_{>γ} has no least element in ℚ), NegInf and InfMinus.
bool is_essential(const QuasiCut& d);

/// Membership of a value (possibly ∞) in the set radii R(δ) a ball of radius δ
/// accepts: v ≥ γ for Elem, v ∈ δ^R for cuts, ∞ always; for Inf only ∞.
bool radius_admits(const RationalInf& v, const QuasiCut& d);

/// Compare the underlying sets {v : radius_admits(v, ·)}: Minus(γ) ~ Elem(γ), Inf ~ InfMinus.
QuasiCut set_radius(const QuasiCut& d);

}  // namespace valtree
