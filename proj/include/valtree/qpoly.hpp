#pragma once

#include "valtree/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace valtree {

/// Dense univariate polynomial over ℚ, coefficients stored low degree first.
/// Always normalized: no trailing zero coefficients (the zero polynomial is empty).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);
  /// Φ_n, the n-th cyclotomic polynomial.
  static QPoly cyclotomic(int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lc() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DomainError for a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly derivative() const;
  QPoly monic() const;
  /// p / gcd(p, p'), monic.
  QPoly squarefree() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  QPoly primitive() const;
  /// Polynomial whose roots are m·r + g for the roots r of this one (m ≠ 0).
  QPoly affine_image(const Rational& m, const Rational& g) const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;

  /// Rational roots with multiplicities, ascending.
  std::vector<std::pair<Rational, int>> rational_roots() const;

  std::string to_string(char var = 'y') const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);

/// Euler's totient.
int totient(int n);

}  // namespace valtree
