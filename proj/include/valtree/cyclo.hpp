#pragma once

#include "valtree/rational.hpp"

#include <string>
#include <vector>

namespace valtree {

/// Exact element of a cyclotomic field ℚ(ζ_n), ζ_n = exp(2πi/n).
///
/// Stored as coefficients of 1, ζ, …, ζ^{φ(n)-1} (reduced modulo Φ_n).
/// Elements of different fields interoperate by lifting both operands to
/// ℚ(ζ_lcm). Rational elements are always stored with n = 1.
class Cyclo {
 public:
  Cyclo() : n_(1) {}
  Cyclo(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclo(long q) : Cyclo(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// ζ_n^k.
  static Cyclo root_of_unity(int n, long k);

  int order() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  /// Requires is_rational().
  Rational to_rational() const;

  /// In ℚ(ζ_n) (n a multiple of order()).
  Cyclo lifted(int n) const;
  /// The Galois automorphism ζ ↦ ζ^a (a coprime to the working order).
  Cyclo galois(int a, int n) const;

  Cyclo operator-() const;
  Cyclo inverse() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// Rational, or a sum of `q*zeta(n,k)` terms in parentheses when longer than one term.
  std::string to_string() const;
  /// True when to_string() needs no parentheses as a factor.
  bool is_atomic() const;

 private:
  Cyclo(int n, std::vector<Rational> c);
  void normalize();

  int n_;
  std::vector<Rational> c_;  // empty means zero
};

int lcm_int(int a, int b);

}  // namespace valtree
