#include "valtree/ordgroup.hpp"

#include "valtree/errors.hpp"

namespace valtree {

ExtValue ExtValue::make(std::int64_t m, const Rational& gamma, const QuasiCut& delta) {
  if (delta.is_elem()) return ExtValue(0, gamma + m * delta.value(), delta);
  if (delta.is_inf()) {
    if (m < 0) throw DomainError("negative multiple of x_inf");
    if (m > 0) return infinity();
    return ExtValue(0, gamma, delta);
  }
  return ExtValue(m, gamma, delta);
}

std::string ExtValue::to_string() const {
  if (inf_) return "inf";
  if (m_ == 0) return valtree::to_string(gamma_);
  std::string out = std::to_string(m_) + "*x";
  out += gamma_ < 0 ? " - " : " + ";
  out += valtree::to_string(Rational(abs(gamma_)));
  out += " @ " + delta_->to_string();
  return out;
}

namespace {

const QuasiCut& common_cut(const ExtValue& u, const ExtValue& v) {
  if (u.m() != 0 && v.m() != 0) {
    if (*u.delta() != *v.delta())
      throw DomainError("values over different cuts: " + u.delta()->to_string() + " vs " + v.delta()->to_string());
    return *u.delta();
  }
  return u.m() != 0 ? *u.delta() : *v.delta();
}

}  // namespace

std::strong_ordering ext_cmp(const ExtValue& u, const ExtValue& v) {
  if (u.is_inf() || v.is_inf()) {
    if (u.is_inf() && v.is_inf()) return std::strong_ordering::equal;
    return u.is_inf() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  std::int64_t k = u.m() - v.m();
  if (k == 0) {
    if (u.m() != 0) common_cut(u, v);
    int c = cmp(u.gamma(), v.gamma());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  const QuasiCut& delta = common_cut(u, v);
  // u ? v  <=>  k·x_δ ? c  <=>  x_δ ? c/k (flipped when k < 0); x_δ never equals a rational.
  Rational q = (v.gamma() - u.gamma()) / Rational(static_cast<long>(k));
  bool x_above_q = in_left(q, delta);
  bool greater = k > 0 ? x_above_q : !x_above_q;
  return greater ? std::strong_ordering::greater : std::strong_ordering::less;
}

ExtValue ext_add(const ExtValue& u, const ExtValue& v) {
  if (u.is_inf() || v.is_inf()) return ExtValue::infinity();
  if (u.m() == 0 && v.m() == 0) {
    const auto& d = u.delta() ? u.delta() : v.delta();
    return d ? ExtValue::make(0, u.gamma() + v.gamma(), *d) : ExtValue::rational(u.gamma() + v.gamma());
  }
  const QuasiCut& delta = common_cut(u, v);
  return ExtValue::make(u.m() + v.m(), u.gamma() + v.gamma(), delta);
}

ExtValue ext_neg(const ExtValue& u) {
  if (u.is_inf()) throw DomainError("inf has no additive inverse");
  if (!u.delta()) return ExtValue::rational(-u.gamma());
  return ExtValue::make(-u.m(), -u.gamma(), *u.delta());
}

std::strong_ordering operator<=>(const LexPair& a, const LexPair& b) {
  int c = cmp(a.k, b.k);
  if (c == 0) c = cmp(a.gamma, b.gamma);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

LexPair to_lex(const ExtValue& u) {
  if (u.is_inf()) throw DomainError("inf has no lexicographic image");
  if (u.m() == 0) return {Integer(0), u.gamma()};
  switch (u.delta()->kind()) {
    case QuasiCut::Kind::NegInf: return {Integer(static_cast<long>(-u.m())), u.gamma()};
    case QuasiCut::Kind::InfMinus: return {Integer(static_cast<long>(u.m())), u.gamma()};
    default: throw DomainError("to_lex needs an improper cut, got " + u.delta()->to_string());
  }
}

QuasiCut position_in_gamma(const ExtValue& u) {
  if (u.is_inf()) return QuasiCut::inf();
  if (u.m() == 0) return QuasiCut::elem(u.gamma());
  return u.delta()->affine(Rational(static_cast<long>(u.m())), u.gamma());
}

bool cross_leq(const ExtValue& u, const ExtValue& v) {
  if (v.is_inf()) return true;
  if (u.is_inf()) return false;
  if (u.m() == 0 || v.m() == 0 || *u.delta() == *v.delta()) return ext_cmp(u, v) <= 0;
  // Both carry x-parts over different cuts: look for γ with u ≤ γ ≤ v.
  // Both positions are proper or improper cuts, so {γ ≥ u} = pu^R and {γ ≤ v} = pv^L.
  return position_in_gamma(u) < position_in_gamma(v);
}

bool same_value(const ExtValue& u, const ExtValue& v) {
  if (u.is_inf() || v.is_inf()) return u.is_inf() && v.is_inf();
  if (u.m() != v.m() || u.gamma() != v.gamma()) return false;
  return u.m() == 0 || *u.delta() == *v.delta();
}

}  // namespace valtree
