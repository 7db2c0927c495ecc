#include "valtree/newton.hpp"

#include "valtree/errors.hpp"
#include "valtree/qpoly.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

namespace valtree {

namespace {

using CPoly = std::vector<Cyclo>;

void trim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CPoly mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

// Divides by (c - r); returns whether the remainder vanished (p replaced by the quotient then).
bool divide_linear(CPoly& p, const Cyclo& r) {
  if (p.size() < 2) return false;
  CPoly q(p.size() - 1);
  Cyclo acc;
  for (std::size_t k = p.size(); k-- > 1;) {
    acc = acc * r + p[k];
    q[k - 1] = acc;
  }
  Cyclo rem = acc * r + p[0];
  if (!rem.is_zero()) return false;
  p = std::move(q);
  return true;
}

std::optional<Integer> exact_root(const Integer& a, unsigned long k) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> rational_root_of(const Rational& a, unsigned long k) {
  auto n = exact_root(a.get_num(), k);
  auto d = exact_root(a.get_den(), k);
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Cyclo> sqrt_rational(const Rational& q);

// Continued-fraction approximation with bounded denominator.
std::optional<Rational> rationalize(long double x, long maxden) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12L) return std::nullopt;
  long double y = x;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    long double a = std::floor(y);
    Integer ai(static_cast<long>(a));
    Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > maxden) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = y - a;
    if (frac < 1e-15L) break;
    y = 1 / frac;
  }
  if (k1 == 0) return std::nullopt;
  return Rational(h1, k1);
}

// Rational quadratic factors of a squarefree p, located from numeric roots and confirmed exactly.
std::vector<QPoly> quadratic_factors(const QPoly& p) {
  using C = std::complex<long double>;
  int d = p.degree();
  std::vector<QPoly> out;
  if (d < 2) return out;
  std::vector<C> a;
  QPoly m = p.monic();
  for (const auto& c : m.coeffs()) a.emplace_back(static_cast<long double>(c.get_d()), 0);
  std::vector<C> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) z[i] = std::polar(1.0L + i * 0.1L, 0.4L + 6.283185307179586L * i / d);
  auto ev = [&](const C& x, C& dv) {
    C v = a.back();
    dv = 0;
    for (int k = d - 1; k >= 0; --k) {
      dv = dv * x + v;
      v = v * x + a[static_cast<std::size_t>(k)];
    }
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    long double moved = 0;
    for (int i = 0; i < d; ++i) {
      C dv;
      C v = ev(z[i], dv);
      if (v == C(0)) continue;
      C ratio = v / dv, sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) sum += C(1) / (z[i] - z[j]);
      C w = ratio / (C(1) - ratio * sum);
      z[i] -= w;
      moved = std::max(moved, std::abs(w));
    }
    if (moved < 1e-17L) break;
  }
  QPoly rest = p;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto sum = rationalize((z[i] + z[j]).real(), 100000), prod = rationalize((z[i] * z[j]).real(), 100000);
      if (!sum || !prod || std::fabs((z[i] + z[j]).imag()) > 1e-6L) continue;
      QPoly q({*prod, -*sum, Rational(1)});
      if (rest.degree() < 2) continue;
      auto [quo, rem] = rest.divmod(q);
      if (!rem.is_zero()) continue;
      rest = quo;
      out.push_back(q);
    }
  return out;
}

// Candidate roots of a rational polynomial: its rational roots, then ρ·ζ_n^k when
// the rest is a product of cyclotomic polynomials after scaling by a single ρ,
// then roots of rational quadratic factors with cyclotomic discriminant roots.
std::vector<Cyclo> rational_poly_candidates(const QPoly& p) {
  std::vector<Cyclo> out;
  QPoly rest = p;
  for (const auto& [q, m] : p.rational_roots()) {
    if (q == 0) continue;
    out.emplace_back(q);
    for (int i = 0; i < m; ++i) rest = rest.divmod(QPoly({-q, Rational(1)})).first;
  }
  while (rest.degree() > 0 && rest.coeff(0) == 0) rest = rest.divmod(QPoly::monomial(1, 1)).first;
  if (rest.degree() >= 2) {
    for (const QPoly& q : quadratic_factors(rest.squarefree())) {
      Rational disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
      if (auto sq = sqrt_rational(disc)) {
        out.push_back((Cyclo(-q.coeff(1)) + *sq) / Cyclo(2));
        out.push_back((Cyclo(-q.coeff(1)) - *sq) / Cyclo(2));
      }
    }
  }
  int d = rest.degree();
  if (d <= 0) return out;
  Rational ratio = rest.coeff(0) / rest.lc();
  auto rho = rational_root_of(abs(ratio), static_cast<unsigned long>(d));
  if (!rho) return out;
  std::vector<Rational> sc(rest.coeffs());
  Rational pw = 1;
  for (auto& c : sc) {
    c *= pw;
    pw *= *rho;
  }
  QPoly s = QPoly(std::move(sc)).monic();
  int bound = 2 * d * d + 2;
  for (int n = 1; n <= bound && s.degree() > 0; ++n) {
    if (totient(n) > s.degree()) continue;
    QPoly phi = QPoly::cyclotomic(n);
    bool used = false;
    while (s.degree() >= phi.degree()) {
      auto [q, r] = s.divmod(phi);
      if (!r.is_zero()) break;
      s = q;
      used = true;
    }
    if (!used) continue;
    for (int k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) out.push_back(Cyclo(*rho) * Cyclo::root_of_unity(n, k));
  }
  return out;
}

int legendre(long a, long p) {
  long r = 1, b = a % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// √p for a prime p, through the quadratic Gauss sum.
Cyclo sqrt_prime(long p) {
  if (p == 2) return Cyclo::root_of_unity(8, 1) + Cyclo::root_of_unity(8, 7);
  Cyclo g;
  for (long a = 1; a < p; ++a) g = g + Cyclo(legendre(a, p)) * Cyclo::root_of_unity(static_cast<int>(p), a);
  return p % 4 == 1 ? g : g * Cyclo::root_of_unity(4, 3);
}

std::optional<Cyclo> sqrt_rational(const Rational& q) {
  if (q == 0) return Cyclo();
  Integer n = abs(q.get_num()) * q.get_den();
  Cyclo root(Rational(Integer(1), q.get_den()));
  if (q < 0) root = root * Cyclo::root_of_unity(4, 1);
  for (long p = 2; p <= 400 && n > 1; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) root = root * Cyclo(p);
    if (e % 2) root = root * sqrt_prime(p);
  }
  if (n == 1) return root;
  auto s = exact_root(n, 2);
  if (!s) return std::nullopt;
  return root * Cyclo(Rational(*s));
}

}  // namespace

std::vector<std::pair<Cyclo, int>> cyclo_poly_roots(const std::vector<Cyclo>& phi_in) {
  CPoly phi = phi_in;
  trim(phi);
  int d = static_cast<int>(phi.size()) - 1;
  if (d <= 0) return {};
  if (phi[0].is_zero()) throw DomainError("edge polynomial vanishes at 0");
  if (d == 1) return {{-phi[0] / phi[1], 1}};

  // b_d (c - c0)^d
  Cyclo c0 = -phi[static_cast<std::size_t>(d - 1)] / (phi.back() * Cyclo(static_cast<long>(d)));
  {
    CPoly test{phi.back()};
    for (int i = 0; i < d; ++i) test = mul(test, CPoly{-c0, Cyclo(1)});
    bool same = test.size() == phi.size();
    for (std::size_t i = 0; same && i < phi.size(); ++i) same = test[i] == phi[i];
    if (same) return {{c0, d}};
  }

  int n = 1;
  for (const auto& c : phi) n = lcm_int(n, c.order());
  CPoly norm{Cyclo(1)};
  for (int a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    CPoly conj;
    for (const auto& c : phi) conj.push_back(c.galois(a, n));
    norm = mul(norm, conj);
  }
  std::vector<Rational> qc;
  for (const auto& c : norm) qc.push_back(c.to_rational());

  std::vector<std::pair<Cyclo, int>> roots;
  int found = 0;
  for (const Cyclo& cand : rational_poly_candidates(QPoly(std::move(qc)))) {
    bool seen = false;
    for (const auto& [r, m] : roots) seen = seen || r == cand;
    if (seen) continue;
    int mult = 0;
    while (divide_linear(phi, cand)) ++mult;
    if (mult > 0) {
      roots.emplace_back(cand, mult);
      found += mult;
    }
  }
  // a leftover quadratic over ℚ splits when its discriminant has a cyclotomic square root
  if (d - found == 2 && phi.size() == 3) {
    Cyclo disc = phi[1] * phi[1] - Cyclo(4) * phi[0] * phi[2];
    if (disc.is_rational()) {
      if (auto sq = sqrt_rational(disc.to_rational())) {
        Cyclo den = Cyclo(2) * phi[2];
        roots.emplace_back((-phi[1] + *sq) / den, 1);
        roots.emplace_back((-phi[1] - *sq) / den, 1);
        found += 2;
      }
    }
  }
  if (found < d) {
    std::string text;
    for (std::size_t i = 0; i < phi_in.size(); ++i) {
      if (phi_in[i].is_zero()) continue;
      if (!text.empty()) text += " + ";
      text += phi_in[i].to_string() + "*c^" + std::to_string(i);
    }
    throw UnsupportedCoefficientField("edge polynomial " + text + " has roots outside the cyclotomic model");
  }
  return roots;
}

namespace {

struct Point {
  int k;
  Rational w;
};

struct Expander {
  Rational order;
  int n;
  Rational vlc;
  std::vector<PuiseuxElt> out;

  PuiseuxElt approx(const PuiseuxElt& s) const { return PuiseuxElt(s.terms(), order); }

  // Exact coefficients stay exact unless terms are actually dropped.
  static PuiseuxElt cap(const PuiseuxElt& a, const Rational& p) {
    if (a.is_exact() && (a.no_terms() || a.terms().rbegin()->first < p)) return a;
    return a.truncated(p);
  }

  void run(const Poly& g_in, const PuiseuxElt& s, const std::optional<Rational>& mu_min, int depth) {
    if (depth > 4096) throw Error("Newton-Puiseux expansion did not terminate");
    Poly g = g_in;
    if (mu_min) {
      std::vector<PuiseuxElt> cs;
      for (int k = 0; k <= g.degree(); ++k)
        cs.push_back(cap(g.coeff(k), vlc + n * order - k * *mu_min + 1));
      g = Poly(std::move(cs));
    }
    std::vector<Point> pts;
    for (int k = 0; k <= g.degree(); ++k) {
      const PuiseuxElt& a = g.coeffs()[static_cast<std::size_t>(k)];
      if (!a.no_terms()) pts.push_back({k, a.terms().begin()->first});
    }
    if (pts.empty()) throw IndeterminateValuation("all coefficients truncated during expansion");
    // lower convex hull
    std::vector<Point> hull;
    for (const auto& p : pts) {
      while (hull.size() >= 2) {
        const Point& a = hull[hull.size() - 2];
        const Point& b = hull.back();
        // drop b unless it lies strictly below segment a-p
        Rational cross = (b.w - a.w) * (p.k - a.k) - (p.w - a.w) * (b.k - a.k);
        if (cross >= 0) hull.pop_back();
        else break;
      }
      hull.push_back(p);
    }
    int x0 = hull.front().k;
    if (x0 > 0) {
      int k0 = 0;
      if (g.coeff(0).is_exact_zero()) {
        out.push_back(s);
        k0 = 1;
      }
      for (int i = k0; i < x0; ++i) out.push_back(approx(s));
    }
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
      const Point& a = hull[h];
      const Point& b = hull[h + 1];
      Rational mu = (a.w - b.w) / (b.k - a.k);
      if (mu_min && mu <= *mu_min) continue;
      if (mu >= order) {
        for (int i = a.k; i < b.k; ++i) out.push_back(approx(s));
        continue;
      }
      std::vector<Cyclo> phi(static_cast<std::size_t>(b.k - a.k + 1));
      Rational level = a.w + a.k * mu;
      for (const auto& p : pts) {
        if (p.k < a.k || p.k > b.k || p.w + p.k * mu != level) continue;
        phi[static_cast<std::size_t>(p.k - a.k)] = g.coeffs()[static_cast<std::size_t>(p.k)].leading_coeff();
      }
      for (const auto& [c, m] : cyclo_poly_roots(phi)) {
        PuiseuxElt step = PuiseuxElt::monomial(c, mu);
        run(g.taylor_shift(step), s + step, mu, depth + 1);
      }
    }
  }
};

}  // namespace

std::vector<PuiseuxElt> puiseux_root_list(const Poly& f, const Rational& order) {
  if (f.degree() < 1) return {};
  for (const auto& a : f.coeffs())
    if (!a.is_exact()) throw DomainError("root expansion needs exact coefficients");
  Expander ex{order, f.degree(), *f.lc().val(), {}};
  ex.run(f, PuiseuxElt(), std::nullopt, 0);
  if (static_cast<int>(ex.out.size()) != f.degree())
    throw Error("Newton-Puiseux expansion produced " + std::to_string(ex.out.size()) + " roots for degree " +
                std::to_string(f.degree()));
  return ex.out;
}

std::vector<RootGroup> puiseux_roots(const Poly& f, const Rational& order) {
  std::vector<PuiseuxElt> roots = puiseux_root_list(f, order);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw IndeterminateValuation("roots coincide at order " + to_string(order) + ": " + roots[i].to_string());
  std::vector<bool> used(roots.size(), false);
  std::vector<RootGroup> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const PuiseuxElt& r = roots[i];
    int e = r.ramification();
    int M = lcm_int(e, r.coeff_order());
    std::vector<std::size_t> members;
    for (int a = 1; a <= M; ++a) {
      if (std::gcd(a, M) != 1) continue;
      for (int k = 0; k < e; ++k) {
        PuiseuxElt c = r.conjugate(a, k, e, M);
        std::size_t j = 0;
        while (j < roots.size() && !(roots[j] == c)) ++j;
        if (j == roots.size())
          throw IndeterminateValuation("conjugate " + c.to_string() + " of " + r.to_string() + " not among the roots");
        if (!used[j]) {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    RootGroup g;
    g.e = e;
    std::sort(members.begin(), members.end());
    for (auto j : members) g.roots.push_back(roots[j]);
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace valtree
