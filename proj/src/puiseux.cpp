#include "valtree/puiseux.hpp"

#include "valtree/errors.hpp"

#include <algorithm>
#include <numeric>

namespace valtree {

namespace {

RationalInf min_inf(const RationalInf& a, const RationalInf& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::string exponent_string(const Rational& e) {
  if (e == 1) return "t";
  if (e.get_den() == 1 && e > 0) return "t^" + e.get_num().get_str();
  return "t^(" + to_string(e) + ")";
}

// Coefficient times a power-like factor; "1" and "-1" disappear.
std::string scaled(const Cyclo& c, const std::string& factor) {
  if (factor.empty()) return c.to_string();
  if (c == Cyclo(1)) return factor;
  if (c == Cyclo(-1)) return "-" + factor;
  return c.to_string() + "*" + factor;
}

void append_signed(std::string& out, const std::string& part) {
  if (out.empty()) {
    out = part;
  } else if (part.front() == '-') {
    out += " - " + part.substr(1);
  } else {
    out += " + " + part;
  }
}

}  // namespace

PuiseuxElt::PuiseuxElt(const Cyclo& c) {
  if (!c.is_zero()) terms_.emplace(Rational(0), c);
}

PuiseuxElt::PuiseuxElt(Terms terms, RationalInf prec) : terms_(std::move(terms)), prec_(std::move(prec)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  drop_beyond_prec();
}

void PuiseuxElt::drop_beyond_prec() {
  if (!prec_) return;
  terms_.erase(terms_.lower_bound(*prec_), terms_.end());
}

PuiseuxElt PuiseuxElt::monomial(const Cyclo& c, const Rational& e) {
  Terms t;
  if (!c.is_zero()) t.emplace(e, c);
  return PuiseuxElt(std::move(t), std::nullopt);
}

RationalInf PuiseuxElt::val() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (prec_) throw IndeterminateValuation("leading term hidden by O(t^" + valtree::to_string(*prec_) + ")");
  return std::nullopt;
}

RationalInf PuiseuxElt::val_lower_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return prec_;
}

const Cyclo& PuiseuxElt::leading_coeff() const {
  if (terms_.empty()) throw IndeterminateValuation("no known leading term");
  return terms_.begin()->second;
}

PuiseuxElt PuiseuxElt::truncated(const Rational& p) const {
  if (prec_ && *prec_ <= p) return *this;
  return PuiseuxElt(terms_, p);
}

Cyclo PuiseuxElt::coeff(const Rational& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclo() : it->second;
}

int PuiseuxElt::ramification() const {
  int e = 1;
  for (const auto& [x, c] : terms_) e = lcm_int(e, static_cast<int>(x.get_den().get_si()));
  return e;
}

int PuiseuxElt::coeff_order() const {
  int n = 1;
  for (const auto& [x, c] : terms_) n = lcm_int(n, c.order());
  return n;
}

PuiseuxElt PuiseuxElt::conjugate(int a, int k, int e, int M) const {
  Terms out;
  for (const auto& [x, c] : terms_) {
    Rational scaled_exp = x * e;
    if (scaled_exp.get_den() != 1) throw DomainError("conjugate: exponent outside t^(1/e)");
    long p = scaled_exp.get_num().get_si();
    Cyclo z = Cyclo::root_of_unity(e, static_cast<long>(k) * p);
    out.emplace(x, c.galois(a, M) * z);
  }
  return PuiseuxElt(std::move(out), prec_);
}

PuiseuxElt PuiseuxElt::operator-() const {
  PuiseuxElt r = *this;
  for (auto& [x, c] : r.terms_) c = -c;
  return r;
}

PuiseuxElt operator+(const PuiseuxElt& a, const PuiseuxElt& b) {
  PuiseuxElt::Terms t = a.terms_;
  for (const auto& [x, c] : b.terms_) {
    auto [it, fresh] = t.emplace(x, c);
    if (!fresh) it->second = it->second + c;
  }
  return PuiseuxElt(std::move(t), min_inf(a.prec_, b.prec_));
}

PuiseuxElt operator-(const PuiseuxElt& a, const PuiseuxElt& b) { return a + (-b); }

PuiseuxElt operator*(const PuiseuxElt& a, const PuiseuxElt& b) {
  RationalInf prec;
  if (a.prec_) prec = min_inf(prec, add(b.val_lower_bound(), a.prec_));
  if (b.prec_) prec = min_inf(prec, add(a.val_lower_bound(), b.prec_));
  PuiseuxElt::Terms t;
  for (const auto& [x, c] : a.terms_) {
    for (const auto& [y, d] : b.terms_) {
      Rational e = x + y;
      if (prec && e >= *prec) break;
      auto [it, fresh] = t.emplace(e, c * d);
      if (!fresh) it->second = it->second + c * d;
    }
  }
  return PuiseuxElt(std::move(t), prec);
}

PuiseuxElt PuiseuxElt::pow(unsigned k) const {
  PuiseuxElt r(1), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

std::string PuiseuxElt::to_string() const {
  std::string out;
  for (const auto& [x, c] : terms_) {
    append_signed(out, x == 0 ? c.to_string() : scaled(c, exponent_string(x)));
  }
  if (prec_) {
    append_signed(out, "O(" + exponent_string(*prec_) + ")");
  }
  return out.empty() ? "0" : out;
}

Poly::Poly(std::vector<PuiseuxElt> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

Poly Poly::x_minus(const PuiseuxElt& c) { return Poly({-c, PuiseuxElt(1)}); }
Poly Poly::constant(const PuiseuxElt& c) { return Poly({c}); }

PuiseuxElt Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return PuiseuxElt();
  return c_[static_cast<std::size_t>(k)];
}

bool Poly::is_base() const {
  for (const auto& a : c_) {
    if (!a.is_exact()) return false;
    for (const auto& [x, c] : a.terms())
      if (x.get_den() != 1 || !c.is_rational()) return false;
  }
  return true;
}

PuiseuxElt Poly::eval(const PuiseuxElt& c) const {
  PuiseuxElt r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * c + *it;
  return r;
}

Poly Poly::taylor_shift(const PuiseuxElt& c) const {
  // Horner with x + c.
  std::vector<PuiseuxElt> r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<PuiseuxElt> next(r.size() + 1);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] = next[i + 1] + r[i];
      next[i] = next[i] + r[i] * c;
    }
    next[0] = next[0] + *it;
    r = std::move(next);
  }
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  std::vector<PuiseuxElt> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * PuiseuxElt(static_cast<long>(k)));
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<PuiseuxElt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<PuiseuxElt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<PuiseuxElt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(PuiseuxElt(1)), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const PuiseuxElt& a = c_[static_cast<std::size_t>(k)];
    if (a.is_exact_zero()) continue;
    std::string xk = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    std::string part;
    bool single = a.is_exact() && a.terms().size() == 1;
    if (k == 0) {
      part = single ? a.to_string() : "(" + a.to_string() + ")";
    } else if (a == PuiseuxElt(1)) {
      part = xk;
    } else if (a == PuiseuxElt(-1)) {
      part = "-" + xk;
    } else if (single && a.terms().begin()->second.is_atomic()) {
      part = a.to_string() + "*" + xk;
    } else {
      part = "(" + a.to_string() + ")*" + xk;
    }
    append_signed(out, part);
  }
  return out;
}

RationalInf px_val(const PuiseuxElt& c) { return c.val(); }
PuiseuxElt px_eval(const Poly& f, const PuiseuxElt& c) { return f.eval(c); }

}  // namespace valtree
