#pragma once

#include "valtree/cyclo.hpp"
#include "valtree/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace valtree {

/// Truncated Puiseux series Σ c_e t^e + O(t^prec) with cyclotomic coefficients.
/// prec == nullopt means the element is known exactly.
class PuiseuxElt {
 public:
  using Terms = std::map<Rational, Cyclo>;

  PuiseuxElt() = default;
  PuiseuxElt(const Cyclo& c);  // NOLINT(google-explicit-constructor)
  PuiseuxElt(const Rational& c) : PuiseuxElt(Cyclo(c)) {}  // NOLINT(google-explicit-constructor)
  PuiseuxElt(long c) : PuiseuxElt(Cyclo(c)) {}  // NOLINT(google-explicit-constructor)
  PuiseuxElt(Terms terms, RationalInf prec);

  static PuiseuxElt monomial(const Cyclo& c, const Rational& e);
  /// t^e
  static PuiseuxElt t_pow(const Rational& e) { return monomial(Cyclo(1), e); }
  /// O(t^p)
  static PuiseuxElt big_o(const Rational& p) { return PuiseuxElt({}, p); }

  const Terms& terms() const { return terms_; }
  const RationalInf& prec() const { return prec_; }
  bool is_exact() const { return !prec_.has_value(); }
  bool is_exact_zero() const { return terms_.empty() && !prec_; }
  /// All known terms vanish (exact zero or O(t^p)).
  bool no_terms() const { return terms_.empty(); }

  /// v̄: least exponent, ∞ for exact zero; IndeterminateValuation for O(t^p).
  RationalInf val() const;
  /// Least exponent if any term is known, else prec (∞ for exact zero).
  RationalInf val_lower_bound() const;
  /// Leading coefficient; requires a known term.
  const Cyclo& leading_coeff() const;

  /// Drops terms with exponent ≥ p and caps the precision at p.
  PuiseuxElt truncated(const Rational& p) const;
  /// Coefficient of t^e (zero when absent).
  Cyclo coeff(const Rational& e) const;

  /// Lcm of exponent denominators.
  int ramification() const;
  /// Lcm of the coefficient field orders.
  int coeff_order() const;

  /// c t^{p/e} ↦ σ_a(c) ζ_e^{k p} t^{p/e}, computed in ℚ(ζ_M); M must be a multiple of e
  /// and of every coefficient order, e a multiple of ramification().
  PuiseuxElt conjugate(int a, int k, int e, int M) const;

  PuiseuxElt operator-() const;
  friend PuiseuxElt operator+(const PuiseuxElt& a, const PuiseuxElt& b);
  friend PuiseuxElt operator-(const PuiseuxElt& a, const PuiseuxElt& b);
  friend PuiseuxElt operator*(const PuiseuxElt& a, const PuiseuxElt& b);
  friend bool operator==(const PuiseuxElt& a, const PuiseuxElt& b) {
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }
  PuiseuxElt pow(unsigned k) const;

  std::string to_string() const;

 private:
  void drop_beyond_prec();
  Terms terms_;
  RationalInf prec_;
};

/// Polynomial in x with Puiseux coefficients, low degree first; no zero-leading entries
/// (a coefficient counts as zero only when it is an exact zero).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<PuiseuxElt> coeffs);
  static Poly x_minus(const PuiseuxElt& c);
  static Poly constant(const PuiseuxElt& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<PuiseuxElt>& coeffs() const { return c_; }
  PuiseuxElt coeff(int k) const;
  const PuiseuxElt& lc() const { return c_.back(); }
  /// Every coefficient exact with integer exponents and rational coefficients.
  bool is_base() const;

  PuiseuxElt eval(const PuiseuxElt& c) const;
  /// f(x + c)
  Poly taylor_shift(const PuiseuxElt& c) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  Poly pow(unsigned k) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<PuiseuxElt> c_;
};

RationalInf px_val(const PuiseuxElt& c);
PuiseuxElt px_eval(const Poly& f, const PuiseuxElt& c);

}  // namespace valtree
