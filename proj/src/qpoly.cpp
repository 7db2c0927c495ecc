#include "valtree/qpoly.hpp"

#include "valtree/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace valtree {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  QPoly r = a;
  for (auto& x : r.c_) x *= s;
  r.normalize();
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {QPoly{}, *this};
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / d.lc();
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return Rational(1 / lc()) * *this;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly QPoly::squarefree() const {
  if (degree() <= 0) return monic();
  return divmod(gcd(*this, derivative())).first.monic();
}

QPoly QPoly::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& a : c_) den = lcm(den, Integer(a.get_den()));
  std::vector<Rational> v;
  Integer content = 0;
  for (const auto& a : c_) {
    Integer n = Integer(a.get_num()) * (den / Integer(a.get_den()));
    content = gcd(content, n);
    v.emplace_back(n);
  }
  if (lc() < 0) content = -content;
  for (auto& a : v) a /= content;
  return QPoly(std::move(v));
}

QPoly QPoly::affine_image(const Rational& m, const Rational& g) const {
  if (m == 0) throw DomainError("affine_image with zero scale");
  // roots r -> y = m r + g, i.e. r = (y - g)/m; substitute into p.
  QPoly lin(std::vector<Rational>{Rational(-g / m), Rational(1 / m)});
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly::constant(*it);
  return acc.primitive();
}

namespace {

int variations(const std::vector<QPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

// Positive divisors of |n| by trial division.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw DomainError("divisors of zero");
  std::vector<std::pair<Integer, int>> factors;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    if (p > 2000000) {
      if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
        throw DomainError("coefficient too large to factor: " + n.get_str());
      break;
    }
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

int QPoly::count_roots(const Rational& lo, const Rational& hi) const {
  if (degree() <= 0) return 0;
  auto seq = sturm_sequence(*this);
  return variations(seq, lo) - variations(seq, hi);
}

std::vector<std::pair<Rational, int>> QPoly::rational_roots() const {
  std::vector<std::pair<Rational, int>> out;
  if (degree() <= 0) return out;
  QPoly p = primitive();
  int zero_mult = 0;
  while (p.coeff(0) == 0) {
    p = QPoly(std::vector<Rational>(p.c_.begin() + 1, p.c_.end()));
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rational(0), zero_mult);
  if (p.degree() > 0) {
    auto nums = divisors(Integer(p.coeff(0).get_num()));
    auto dens = divisors(Integer(p.lc().get_num()));
    std::vector<Rational> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens) {
        Rational q(a, b);
        q.canonicalize();
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& q : candidates) {
      int mult = 0;
      QPoly lin(std::vector<Rational>{-q, 1});
      while (p.degree() > 0 && p.eval(q) == 0) {
        p = p.divmod(lin).first;
        ++mult;
      }
      if (mult > 0) out.emplace_back(q, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += valtree::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

QPoly QPoly::cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Φ_d for every proper divisor d.
  QPoly p = QPoly::monomial(1, n) - QPoly::constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.divmod(cyclotomic(d)).first;
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace valtree
