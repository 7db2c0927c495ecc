#pragma once

#include "valtree/cuts.hpp"
#include "valtree/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace valtree {

/// An element m·x_δ + γ of Γ(δ) = x_δℤ ⊕ Γ, or ∞.
///
/// Values with m = 0 are plain elements of Γ and compare against any group.
/// When δ is a principal quasi-cut (Elem) the symbol x_δ is δ itself, so the
/// constructor folds m·δ into γ; when δ = Inf, x_δ = ∞.
class ExtValue {
 public:
  static ExtValue infinity() { return ExtValue(); }
  static ExtValue rational(const Rational& g) { return ExtValue(0, g, std::nullopt); }
  /// Normalizing constructor; negative multiples of x_∞ are rejected.
  static ExtValue make(std::int64_t m, const Rational& gamma, const QuasiCut& delta);

  bool is_inf() const { return inf_; }
  bool is_rational() const { return !inf_ && m_ == 0; }
  std::int64_t m() const { return m_; }
  const Rational& gamma() const { return gamma_; }
  const std::optional<QuasiCut>& delta() const { return delta_; }

  /// `m*x + p/q @ delta`, a bare rational when m = 0, or `inf`.
  std::string to_string() const;

 private:
  ExtValue() : inf_(true) {}
  ExtValue(std::int64_t m, Rational g, std::optional<QuasiCut> d)
      : inf_(false), m_(m), gamma_(std::move(g)), delta_(std::move(d)) {}

  bool inf_;
  std::int64_t m_ = 0;
  Rational gamma_;
  std::optional<QuasiCut> delta_;
};

/// Total order on values sharing δ (or plain Γ values, or ∞).
/// Throws DomainError when both operands carry x-parts over different cuts.
std::strong_ordering ext_cmp(const ExtValue& u, const ExtValue& v);

ExtValue ext_add(const ExtValue& u, const ExtValue& v);
ExtValue ext_neg(const ExtValue& u);

/// Element of (ℤ × Γ)_lex.
struct LexPair {
  Integer k;
  Rational gamma;
  friend std::strong_ordering operator<=>(const LexPair& a, const LexPair& b);
  friend bool operator==(const LexPair& a, const LexPair& b) { return a.k == b.k && a.gamma == b.gamma; }
};

/// Γ(−∞) → (ℤ×Γ)_lex: m x + γ ↦ (−m, γ); Γ(∞⁻) → (ℤ×Γ)_lex: m x + γ ↦ (m, γ).
LexPair to_lex(const ExtValue& u);

/// Where a finite value sits relative to Γ: Elem(γ) for plain values,
/// otherwise the cut of Γ that m·x_δ + γ realizes.
QuasiCut position_in_gamma(const ExtValue& u);

/// Comparison across codomains: u ≤ v when they share a group and ext_cmp
/// says so, otherwise when some γ ∈ Γ satisfies u ≤ γ ≤ v. ∞ is the top.
bool cross_leq(const ExtValue& u, const ExtValue& v);

/// Same element of the same group (m, γ, and δ when m ≠ 0).
bool same_value(const ExtValue& u, const ExtValue& v);

}  // namespace valtree
