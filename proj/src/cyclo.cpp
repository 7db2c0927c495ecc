#include "valtree/cyclo.hpp"

#include "valtree/errors.hpp"
#include "valtree/qpoly.hpp"

#include <numeric>

namespace valtree {

int lcm_int(int a, int b) { return std::lcm(a, b); }

namespace {

// Reduce Σ v_k ζ^k (any length) modulo Φ_n.
std::vector<Rational> reduce(int n, std::vector<Rational> v) {
  QPoly r = QPoly(std::move(v)).divmod(QPoly::cyclotomic(n)).second;
  return r.coeffs();
}

}  // namespace

Cyclo::Cyclo(const Rational& q) : n_(1) {
  if (q != 0) c_.push_back(q);
}

Cyclo::Cyclo(int n, std::vector<Rational> c) : n_(n), c_(reduce(n, std::move(c))) { normalize(); }

void Cyclo::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() <= 1) n_ = 1;
}

Cyclo Cyclo::root_of_unity(int n, long k) {
  if (n < 1) throw DomainError("root of unity order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
  v.back() = 1;
  return Cyclo(n, std::move(v));
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclo Cyclo::lifted(int n) const {
  if (n % n_ != 0) throw DomainError("cannot lift to a non-multiple order");
  if (n == n_ || c_.empty()) return *this;
  int step = n / n_;
  std::vector<Rational> v(c_.size() * static_cast<std::size_t>(step));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k * static_cast<std::size_t>(step)] = c_[k];
  Cyclo r;
  r.n_ = n;
  r.c_ = reduce(n, std::move(v));
  return r;  // deliberately not normalized: caller works in ℚ(ζ_n)
}

Cyclo Cyclo::galois(int a, int n) const {
  if (c_.empty() || n_ == 1) return *this;
  Cyclo x = lifted(n);
  std::vector<Rational> v(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < x.c_.size(); ++k) {
    std::size_t e = (k * static_cast<std::size_t>(a)) % static_cast<std::size_t>(n);
    v[e] += x.c_[k];
  }
  return Cyclo(n, std::move(v));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  int n = std::lcm(a.n_, b.n_);
  Cyclo x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> v(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) v[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) v[i] += y.c_[i];
  return Cyclo(n, std::move(v));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.is_zero() || b.is_zero()) return Cyclo();
  int n = std::lcm(a.n_, b.n_);
  Cyclo x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> v(x.c_.size() + y.c_.size());
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  return Cyclo(n, std::move(v));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (n_ == 1) return Cyclo(Rational(1 / c_[0]));
  // Extended Euclid: s·a + t·Φ = 1.
  QPoly phi = QPoly::cyclotomic(n_);
  QPoly r0 = phi, r1 = QPoly(c_);
  QPoly s0, s1 = QPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Φ_n is irreducible.
  QPoly inv = Rational(1 / r1.coeff(0)) * s1;
  return Cyclo(n_, inv.coeffs());
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

bool Cyclo::is_atomic() const {
  std::size_t nonzero = 0;
  for (const auto& a : c_) nonzero += a != 0;
  return nonzero <= 1;
}

std::string Cyclo::to_string() const {
  if (c_.empty()) return "0";
  if (n_ == 1) return valtree::to_string(c_[0]);
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& a = c_[k];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += valtree::to_string(mag);
      continue;
    }
    if (mag != 1) out += valtree::to_string(mag) + "*";
    out += "zeta(" + std::to_string(n_) + "," + std::to_string(k) + ")";
  }
  return is_atomic() ? out : "(" + out + ")";
}

}  // namespace valtree
