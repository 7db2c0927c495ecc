#include "valtree/suite.hpp"

#include "valtree/apprtype.hpp"
#include "valtree/diskoids.hpp"
#include "valtree/errors.hpp"
#include "valtree/newton.hpp"
#include "valtree/parse.hpp"
#include "valtree/valuation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace valtree {

namespace {

using Rng = std::mt19937_64;

long pick(Rng& g, long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }

Rational rq(Rng& g, long lo, long hi, long maxden) {
  long d = pick(g, 1, maxden);
  Rational r(pick(g, lo * d, hi * d), d);
  r.canonicalize();
  return r;
}

Rational nonzero_q(Rng& g) {
  Rational r(pick(g, 1, 5), pick(g, 1, 3));
  r.canonicalize();
  return g() % 2 ? r : Rational(-r);
}

PuiseuxElt rand_px(Rng& g, int max_terms, long max_exp = 3) {
  PuiseuxElt::Terms t;
  int n = static_cast<int>(pick(g, 0, max_terms));
  for (int i = 0; i < n; ++i) {
    long den = pick(g, 1, 3);
    Rational e(pick(g, 0, max_exp * den), den);
    e.canonicalize();
    t[e] = t[e] + Cyclo(nonzero_q(g));
  }
  return PuiseuxElt(t, std::nullopt);
}

PuiseuxElt rand_qt(Rng& g) {
  PuiseuxElt::Terms t;
  for (long k = 0; k <= 2; ++k)
    if (g() % 2) t[Rational(k)] = Cyclo(nonzero_q(g));
  return PuiseuxElt(t, std::nullopt);
}

PuiseuxElt rand_laurent(Rng& g) {
  PuiseuxElt::Terms t;
  for (long k = -2; k <= 3; ++k)
    if (g() % 3 == 0) t[Rational(k)] = Cyclo(nonzero_q(g));
  return PuiseuxElt(t, std::nullopt);
}

struct CorpusPoly {
  Poly f;
  std::vector<PuiseuxElt> roots;
};

// Products of factors over ℚ(t) whose roots expand with cyclotomic coefficients.
CorpusPoly rand_corpus(Rng& g, int max_deg = 6) {
  while (true) {
    CorpusPoly cp{Poly::constant(PuiseuxElt(1)), {}};
    int deg = 0;
    int target = static_cast<int>(pick(g, 1, max_deg));
    while (deg < target) {
      int kind = static_cast<int>(pick(g, 0, 3));
      PuiseuxElt p = rand_qt(g);
      Rational c = nonzero_q(g);
      if (kind == 0 || target - deg < 2) {
        cp.f = cp.f * Poly::x_minus(p);
        cp.roots.push_back(p);
        deg += 1;
      } else if (kind == 1) {
        long k = pick(g, 0, 2);
        PuiseuxElt s = PuiseuxElt::monomial(Cyclo(c), Rational(2 * k + 1, 2));
        cp.f = cp.f * (Poly::x_minus(p).pow(2) - Poly::constant(PuiseuxElt::monomial(Cyclo(c * c), Rational(2 * k + 1))));
        cp.roots.push_back(p + s);
        cp.roots.push_back(p - s);
        deg += 2;
      } else if (kind == 2 && target - deg >= 3) {
        long k = std::vector<long>{1, 2, 4, 5}[g() % 4];
        cp.f = cp.f * (Poly({PuiseuxElt(), PuiseuxElt(), PuiseuxElt(), PuiseuxElt(1)}) -
                       Poly::constant(PuiseuxElt::monomial(Cyclo(c * c * c), Rational(k))));
        for (int j = 0; j < 3; ++j)
          cp.roots.push_back(PuiseuxElt::monomial(Cyclo(c) * Cyclo::root_of_unity(3, j), Rational(k, 3)));
        deg += 3;
      } else {
        long k = pick(g, 0, 2);
        PuiseuxElt s = PuiseuxElt::monomial(Cyclo(c) * Cyclo::root_of_unity(4, 1), Rational(k));
        cp.f = cp.f * (Poly::x_minus(p).pow(2) + Poly::constant(PuiseuxElt::monomial(Cyclo(c * c), Rational(2 * k))));
        cp.roots.push_back(p + s);
        cp.roots.push_back(p - s);
        deg += 2;
      }
    }
    bool distinct = true;
    for (std::size_t i = 0; i < cp.roots.size(); ++i)
      for (std::size_t j = i + 1; j < cp.roots.size(); ++j) distinct = distinct && !(cp.roots[i] == cp.roots[j]);
    if (distinct) return cp;
  }
}

QuasiCut sqrt_cut(long m) {
  long lo = 1;
  while ((lo + 1) * (lo + 1) <= m) ++lo;
  return QuasiCut::real(QPoly({Rational(-m), Rational(0), Rational(1)}), Rational(lo), Rational(lo + 1));
}

QuasiCut rand_radius(Rng& g, bool with_inf) {
  int kind = static_cast<int>(pick(g, 0, with_inf ? 7 : 6));
  Rational q = rq(g, -1, 3, 3);
  switch (kind) {
    case 0:
    case 1: return QuasiCut::elem(q);
    case 2: return QuasiCut::minus(q);
    case 3: return QuasiCut::plus(q);
    case 4: {
      long m = std::vector<long>{2, 3, 5, 6, 7}[g() % 5];
      return sqrt_cut(m).affine(Rational(1, pick(g, 1, 3)), rq(g, -1, 1, 2));
    }
    case 5: return QuasiCut::neg_inf();
    case 6: return QuasiCut::inf_minus();
    default: return QuasiCut::inf();
  }
}

// An exponent near the radius so that boundary cases come up often.
Rational near_radius(Rng& g, const QuasiCut& d) {
  Rational jitter = Rational(pick(g, -2, 2), pick(g, 2, 4));
  switch (d.kind()) {
    case QuasiCut::Kind::Elem:
    case QuasiCut::Kind::Minus:
    case QuasiCut::Kind::Plus: return g() % 2 ? d.value() : d.value() + jitter;
    case QuasiCut::Kind::Real:
      return (g() % 2 ? d.algebraic().lo() : d.algebraic().hi()) + (g() % 2 ? Rational(0) : jitter);
    case QuasiCut::Kind::InfMinus:
    case QuasiCut::Kind::Inf: return Rational(pick(g, 4, 9));
    default: return rq(g, -2, 3, 3);
  }
}

PuiseuxElt perturb(Rng& g, const PuiseuxElt& a, const Rational& beta) {
  return a + PuiseuxElt::monomial(Cyclo(nonzero_q(g)), beta);
}

CriterionResult start(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

std::string ratio(long good, long total) { return std::to_string(good) + "/" + std::to_string(total); }

// f = Σ c_n t^{e_n} (x − a)^n
Poly expansion_at(const PuiseuxElt& a, const std::vector<std::pair<Rational, Rational>>& ce) {
  Poly f, step = Poly::x_minus(a), pw = Poly::constant(PuiseuxElt(1));
  for (const auto& [c, e] : ce) {
    if (c != 0) f = f + Poly::constant(PuiseuxElt::monomial(Cyclo(c), e)) * pw;
    pw = pw * step;
  }
  return f;
}

// ---------------------------------------------------------------------------

CriterionResult c1_oracle_agreement(Rng& g) {
  CriterionResult r = start(1, "monomial valuation equals brute-force ball minimum (500 triples, radius in Gamma)");
  long good = 0;
  for (int k = 0; k < 500; ++k) {
    CorpusPoly cp = rand_corpus(g);
    PuiseuxElt a = g() % 2 ? rand_px(g, 3) : perturb(g, cp.roots[g() % cp.roots.size()], rq(g, 0, 3, 3));
    Rational gam = rq(g, -1, 3, 3);
    ExtValue ev = eval(ParamVal::mono(a, QuasiCut::elem(gam)), cp.f);
    OracleResult orc = min_over_ball({a, QuasiCut::elem(gam)}, cp.f, 6, g());
    if (same_value(ev, orc.value)) ++good;
    else if (r.detail.empty())
      r.detail = "mismatch at a=" + a.to_string() + " gamma=" + to_string(gam) + " f=" + cp.f.to_string() + ": " +
                 ev.to_string() + " vs " + orc.value.to_string() + "; ";
    ++r.cases;
  }
  r.pass = good == r.cases;
  r.detail += ratio(good, r.cases) + " agree";
  return r;
}

bool sampled_sets_equal(const PointedBall& b, const PointedBall& c, Rng& g) {
  std::vector<PuiseuxElt> pts{b.center, c.center};
  std::uint64_t state = g();
  for (int k = 0; k < 6; ++k) {
    pts.push_back(sample_in_ball(b, state));
    pts.push_back(sample_in_ball(c, state));
  }
  for (const auto& p : pts)
    if (contains(b, p) != contains(c, p)) return false;
  return true;
}

CriterionResult c2_coincidence(Rng& g) {
  CriterionResult r = start(2, "ball equality iff equal radius and center membership; center exchange (300 cases)");
  long good = 0, exchanges = 0, equal_cases = 0;
  for (int k = 0; k < 300; ++k) {
    QuasiCut d = rand_radius(g, true);
    PuiseuxElt a = rand_px(g, 3);
    PuiseuxElt b = g() % 5 < 3 ? perturb(g, a, near_radius(g, d)) : rand_px(g, 3);
    if (g() % 10 == 0) b = a;
    QuasiCut e = g() % 4 ? d : rand_radius(g, true);
    PointedBall B{a, d}, C{b, e};
    bool got = ball_eq(B, C);
    bool oracle = d == e && sampled_sets_equal(B, C, g);
    bool ok = got == oracle && got == (d == e && contains(B, b));
    if (contains(B, b)) {
      PointedBall X{b, d};
      ok = ok && ball_eq(B, X) && sampled_sets_equal(B, X, g);
      ++exchanges;
    }
    equal_cases += got;
    if (ok) ++good;
    else if (r.detail.empty()) r.detail = "failure at " + B.to_string() + " vs " + C.to_string() + "; ";
    ++r.cases;
  }
  r.pass = good == r.cases && equal_cases > 0 && equal_cases < r.cases;
  r.detail += ratio(good, r.cases) + " consistent (" + std::to_string(equal_cases) + " equal pairs, " +
              std::to_string(exchanges) + " center exchanges)";
  return r;
}

CriterionResult c3_order_transport(Rng& g) {
  CriterionResult r = start(3, "pointed-ball order transports to valuations; witnesses otherwise (300 pairs x 20 polys)");
  std::vector<Poly> pool;
  for (int k = 0; k < 60; ++k) pool.push_back(rand_corpus(g, 5).f);
  long good = 0, leq = 0, witnessed = 0;
  for (int k = 0; k < 300; ++k) {
    QuasiCut d = rand_radius(g, false);
    PuiseuxElt a = rand_px(g, 3);
    PointedBall B{a, d};
    PointedBall C{a, d};
    if (g() % 3) {
      C = {perturb(g, a, near_radius(g, d) + Rational(pick(g, 0, 2), 2)), rand_radius(g, false)};
      if (g() % 2 && d < C.radius) C.radius = d;
      if (g() % 4 == 0) C.center = a;
    } else {
      C = {rand_px(g, 3), rand_radius(g, false)};
    }
    bool ok = true;
    ParamVal mb = ParamVal::mono(B.center, B.radius), mc = ParamVal::mono(C.center, C.radius);
    if (pointed_leq(B, C)) {
      ++leq;
      for (int j = 0; j < 20; ++j) {
        const Poly& f = pool[g() % pool.size()];
        if (!cross_leq(eval(mb, f), eval(mc, f))) {
          ok = false;
          if (r.detail.empty())
            r.detail = "order not transported for " + B.to_string() + " <= " + C.to_string() + " at " + f.to_string() + "; ";
        }
      }
    } else {
      Poly w = distinguishing_witness(B, C);
      ok = w.degree() == 1 && !cross_leq(eval(mb, w), eval(mc, w));
      witnessed += ok;
      if (!ok && r.detail.empty()) r.detail = "no witness for " + B.to_string() + " vs " + C.to_string() + "; ";
    }
    good += ok;
    ++r.cases;
  }
  r.pass = good == r.cases && leq >= 50 && r.cases - leq >= 50;
  r.detail += ratio(good, r.cases) + " hold (" + std::to_string(leq) + " comparable pairs checked on 20 polys, " +
              std::to_string(witnessed) + " witnessed)";
  return r;
}

CriterionResult c4_weneed(Rng& g) {
  CriterionResult r = start(4, "minimum / min-minus / infimum cases of the ball-value proposition (3 x 30 instances)");
  long good[3] = {0, 0, 0}, total[3] = {0, 0, 0};
  auto run = [&](char expect, const PuiseuxElt& a, const QuasiCut& d, const Poly& f) {
    WeneedReport rep = weneed_check(a, d, f, 10, g());
    int idx = expect - 'a';
    ++total[idx];
    if (rep.which == expect && rep.ok) ++good[idx];
    else if (r.detail.empty())
      r.detail = std::string("case ") + expect + " failed at a=" + a.to_string() + " radius=" + d.to_string() +
                 " f=" + f.to_string() + " (" + rep.detail + "); ";
  };
  auto coeffs = [&](int deg, bool zero_constant, const Rational& big) {
    std::vector<std::pair<Rational, Rational>> ce;
    for (int n = 0; n <= deg; ++n) {
      Rational e = rq(g, 0, 3, 2);
      Rational c = n == deg || g() % 3 ? nonzero_q(g) : Rational(0);
      ce.emplace_back(c, e);
    }
    if (zero_constant) ce[0] = {g() % 2 ? Rational(0) : nonzero_q(g), big};
    return ce;
  };
  for (int k = 0; k < 30; ++k) {
    PuiseuxElt a = rand_px(g, 2);
    if (k < 15) {
      run('a', a, QuasiCut::elem(rq(g, -1, 2, 3)), rand_corpus(g, 5).f);
    } else {
      // constant term dominates: 0 ∈ S for any radius that is at least 0
      auto ce = coeffs(static_cast<int>(pick(g, 1, 4)), false, 0);
      ce[0] = {nonzero_q(g), Rational(-2)};
      QuasiCut d = std::vector<QuasiCut>{QuasiCut::plus(rq(g, 0, 2, 3)), sqrt_cut(2), QuasiCut::minus(rq(g, 0, 2, 3)),
                                         QuasiCut::inf_minus()}[g() % 4];
      run('a', a, d, expansion_at(a, ce));
    }
  }
  for (int k = 0; k < 30; ++k) {
    PuiseuxElt a = rand_px(g, 2);
    Rational gam = rq(g, -1, 2, 3);
    run('b', a, QuasiCut::minus(gam), expansion_at(a, coeffs(static_cast<int>(pick(g, 1, 5)), true, Rational(40))));
  }
  for (int k = 0; k < 30; ++k) {
    PuiseuxElt a = rand_px(g, 2);
    QuasiCut d = std::vector<QuasiCut>{sqrt_cut(std::vector<long>{2, 3, 5, 7}[g() % 4]).affine(1, rq(g, -2, 0, 2)),
                                       QuasiCut::plus(rq(g, -1, 2, 3)), QuasiCut::neg_inf()}[k % 3];
    run('c', a, d, expansion_at(a, coeffs(static_cast<int>(pick(g, 1, 5)), true, Rational(40))));
  }
  r.cases = total[0] + total[1] + total[2];
  r.pass = good[0] == total[0] && good[1] == total[1] && good[2] == total[2];
  r.detail += "(a) " + ratio(good[0], total[0]) + ", (b) " + ratio(good[1], total[1]) + ", (c) " + ratio(good[2], total[2]);
  return r;
}

// Independent comparison keys for m·x_δ + γ.
int oracle_cmp(const QuasiCut& d, long m1, const Rational& g1, long m2, const Rational& g2, long sq) {
  auto lex = [](const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
    if (a1 != a2) return a1 < a2 ? -1 : 1;
    if (b1 != b2) return b1 < b2 ? -1 : 1;
    return 0;
  };
  switch (d.kind()) {
    case QuasiCut::Kind::Minus: return lex(m1 * d.value() + g1, -m1, m2 * d.value() + g2, -m2);
    case QuasiCut::Kind::Plus: return lex(m1 * d.value() + g1, m1, m2 * d.value() + g2, m2);
    case QuasiCut::Kind::NegInf: return lex(-m1, g1, -m2, g2);
    case QuasiCut::Kind::InfMinus: return lex(m1, g1, m2, g2);
    default: {
      // sign of (m1 − m2)·√sq − (g2 − g1)
      long k = m1 - m2;
      Rational c = g2 - g1;
      if (k == 0) return c > 0 ? -1 : c < 0 ? 1 : 0;
      int sk = k > 0 ? 1 : -1;
      if (c == 0 || (c > 0) != (k > 0)) return sk;
      Rational lhs = Rational(k * k * sq), rhs = c * c;
      return lhs > rhs ? sk : -sk;
    }
  }
}

CriterionResult c5_group_order(Rng& g) {
  CriterionResult r = start(5, "extended value group order: total order, translation invariance, lex isomorphism");
  long bad = 0, checks = 0;
  auto note = [&](const std::string& s) {
    ++bad;
    if (r.detail.empty()) r.detail = s + "; ";
  };
  auto sgn = [](std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; };
  std::vector<std::pair<QuasiCut, long>> classes{{QuasiCut::minus(Rational(1, 2)), 0}, {QuasiCut::plus(Rational(1, 2)), 0},
                                                 {sqrt_cut(2), 2}, {QuasiCut::neg_inf(), 0}, {QuasiCut::inf_minus(), 0}};
  for (const auto& [d, sq] : classes) {
    for (int k = 0; k < 1000; ++k) {
      long m[3];
      Rational gm[3];
      ExtValue u[3] = {ExtValue::infinity(), ExtValue::infinity(), ExtValue::infinity()};
      for (int i = 0; i < 3; ++i) {
        m[i] = pick(g, -3, 3);
        gm[i] = rq(g, -3, 3, 4);
        if (g() % 8 == 0 && i > 0) {
          m[i] = m[0];
          gm[i] = gm[0];
        }
        u[i] = ExtValue::make(m[i], gm[i], d);
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int c = sgn(ext_cmp(u[i], u[j]));
          ++checks;
          if (c != oracle_cmp(d, m[i], gm[i], m[j], gm[j], sq)) note("oracle disagreement at " + u[i].to_string() + " vs " + u[j].to_string());
          if (c != -sgn(ext_cmp(u[j], u[i]))) note("antisymmetry");
          if ((c == 0) != same_value(u[i], u[j])) note("equality");
          int t = sgn(ext_cmp(ext_add(u[i], u[(i + 1) % 3]), ext_add(u[j], u[(i + 1) % 3])));
          if (t != c) note("translation invariance at " + u[i].to_string());
        }
      if (ext_cmp(u[0], u[1]) <= 0 && ext_cmp(u[1], u[2]) <= 0 && ext_cmp(u[0], u[2]) > 0) note("transitivity");
      if (!same_value(ext_add(u[0], ext_neg(u[0])), ExtValue::make(0, 0, d))) note("inverse");
      ++r.cases;
    }
  }
  for (int k = 0; k < 20; ++k) {
    Rational gam = rq(g, -5, 5, 7);
    ++checks;
    if (ext_cmp(ExtValue::make(2, 0, QuasiCut::plus(gam)), ExtValue::rational(2 * gam)) <= 0) note("2x_{g+} > 2g regression");
    if (ext_cmp(ExtValue::make(1, 0, QuasiCut::neg_inf()), ExtValue::rational(gam * 1000)) >= 0) note("x_{-inf} below Gamma");
  }
  for (const QuasiCut& d : {QuasiCut::neg_inf(), QuasiCut::inf_minus()}) {
    for (int k = 0; k < 200; ++k) {
      ExtValue u = ExtValue::make(pick(g, -4, 4), rq(g, -3, 3, 3), d);
      ExtValue v = ExtValue::make(pick(g, -4, 4), rq(g, -3, 3, 3), d);
      ++checks;
      if (sgn(ext_cmp(u, v)) != sgn(to_lex(u) <=> to_lex(v))) note("to_lex order at " + u.to_string() + " vs " + v.to_string());
    }
    r.cases += 200;
  }
  r.pass = bad == 0;
  r.detail += std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks over 5 cut classes";
  return r;
}

CriterionResult c6_limits(Rng& g) {
  CriterionResult r = start(6, "limit valuations stabilize and match the nest-ball oracle (3 nests x 50 polys)");
  std::vector<Nest> nests{Nest::canonical(), Nest({2, Rational(1, 2), parse_puiseux("1 + t"), 0}),
                          Nest({-1, Rational(-1, 3), PuiseuxElt(), 2})};
  long good = 0;
  int max_cert = 0;
  EvalConfig cfg;
  for (const Nest& n : nests) {
    for (int k = 0; k < 50; ++k) {
      // roots deep inside the first balls of the nest alongside corpus factors
      Poly f = Poly::constant(PuiseuxElt(1));
      int deg = 0;
      int near = static_cast<int>(pick(g, 0, 3));
      for (int j = 0; j < near; ++j) {
        int i = static_cast<int>(pick(g, 0, 5));
        Rational beta = n.radius(i) + rq(g, 0, 2, 3);
        f = f * Poly::x_minus(perturb(g, n.center(i), beta));
        ++deg;
      }
      if (deg == 0 || g() % 2) f = f * rand_corpus(g, std::max(1, 6 - deg)).f;
      bool ok = true;
      try {
        LimitTrace tr = limit_eval(n, f, cfg);
        max_cert = std::max(max_cert, tr.certificate);
        for (std::size_t i = 1; i < tr.prefix.size(); ++i) ok = ok && ext_cmp(tr.prefix[i - 1], tr.prefix[i]) <= 0;
        for (int i = tr.certificate; i <= tr.certificate + 3; ++i)
          ok = ok && same_value(eval(ParamVal::mono(n.center(i), QuasiCut::elem(n.radius(i))), f), tr.value);
        OracleResult orc = min_over_nest(n, f, tr.certificate + 3, 3, g());
        ok = ok && same_value(orc.value, tr.value) && tr.certificate <= 64;
        if (!ok && r.detail.empty()) r.detail = "mismatch on " + n.to_string() + " f=" + f.to_string() + "; ";
      } catch (const Error& e) {
        ok = false;
        if (r.detail.empty()) r.detail = std::string("error: ") + e.what() + "; ";
      }
      good += ok;
      ++r.cases;
    }
  }
  r.pass = good == r.cases;
  r.detail += ratio(good, r.cases) + " stabilized and matched (largest certificate index " + std::to_string(max_cert) + ")";
  return r;
}

CriterionResult c7_diskoids(Rng& g) {
  CriterionResult r = start(7, "diskoid of a root orbit equals the union of conjugate balls (200 points per instance)");
  const char* polys[] = {"x^2 - t", "x^3 - t", "x^4 - t^2", "x^2 - t^2"};
  long good_pts = 0, pts = 0, instances = 0, inside = 0;
  for (const char* fs : polys) {
    Poly f = parse_poly(fs);
    auto groups = puiseux_roots(f, 16);
    std::vector<PuiseuxElt> all;
    for (const auto& gr : groups) all.insert(all.end(), gr.roots.begin(), gr.roots.end());
    std::vector<QuasiCut> radii{QuasiCut::elem(Rational(1, 4)), QuasiCut::elem(1), QuasiCut::plus(Rational(1, 2)),
                                QuasiCut::minus(Rational(3, 2)), sqrt_cut(2).affine(Rational(1, 2), 0)};
    for (const auto& gr : groups) {
      for (const auto& d : radii) {
        Diskoid D = orbit_to_diskoid(PointedBall{gr.roots[0], d}, f);
        ++instances;
        for (int k = 0; k < 200; ++k) {
          PuiseuxElt c;
          if (k % 10 == 9) {
            c = rand_px(g, 3);
          } else {
            const PuiseuxElt& base = all[g() % all.size()];
            Rational beta = std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                                  Rational(2, 3), Rational(3, 4), Rational(1), Rational(5, 4),
                                                  Rational(3, 2), Rational(2)}[g() % 10];
            if (g() % 4 == 0) beta += Rational(1, pick(g, 5, 12));
            Cyclo u = g() % 3 ? Cyclo(nonzero_q(g)) : Cyclo(nonzero_q(g)) * Cyclo::root_of_unity(4, pick(g, 0, 3));
            c = base + PuiseuxElt::monomial(u, beta);
            if (k % 17 == 0) c = base;
          }
          bool in_union = false;
          for (const auto& rr : gr.roots) in_union = in_union || contains(PointedBall{rr, d}, c);
          bool got = disk_member(D, c);
          good_pts += got == in_union;
          inside += in_union;
          ++pts;
          if (got != in_union && r.detail.empty())
            r.detail = "disagreement for " + D.to_string() + " at " + c.to_string() + "; ";
        }
      }
    }
  }
  r.cases = instances;
  r.pass = good_pts == pts && inside > 0 && inside < pts;
  r.detail += ratio(good_pts, pts) + " points agree over " + std::to_string(instances) + " instances (" +
              std::to_string(inside) + " inside)";
  return r;
}

CriterionResult c8_support(Rng& g) {
  CriterionResult r = start(8, "support valuations: multiplicativity, ultrametric law, conjugate independence, leaf order");
  long bad = 0, checks = 0;
  auto note = [&](const std::string& s) {
    ++bad;
    if (r.detail.empty()) r.detail = s + "; ";
  };
  auto rand_base = [&]() {
    std::vector<PuiseuxElt> cs;
    int deg = static_cast<int>(pick(g, 0, 3));
    for (int i = 0; i <= deg; ++i) cs.push_back(i == deg ? PuiseuxElt(nonzero_q(g)) * rand_qt(g) + PuiseuxElt(1) : rand_qt(g));
    Poly p(cs);
    return p.is_zero() ? Poly::constant(PuiseuxElt(1)) : p;
  };
  for (int k = 0; k < 30; ++k) {
    CorpusPoly cp = rand_corpus(g);
    for (const auto& grp : puiseux_roots(cp.f, 16)) {
      for (int j = 0; j < 4; ++j) {
        Poly a = rand_base(), b = rand_base();
        if (g() % 5 == 0) a = a * cp.f;
        try {
          RationalInf va = support_val(grp, a), vb = support_val(grp, b);
          RationalInf vab = support_val(grp, a * b), vs = support_val(grp, a + b);
          checks += 3;
          if (compare(vab, add(va, vb)) != 0) note("multiplicativity");
          if (compare(vs, compare(va, vb) < 0 ? va : vb) < 0) note("ultrametric");
          ExtValue w = eval(ParamVal::mono(grp.roots[0], QuasiCut::inf()), a);
          if (compare(w.is_inf() ? RationalInf() : RationalInf(w.gamma()), va) != 0) note("v_F vs omega_{a,inf}");
        } catch (const Error& e) {
          note(std::string("conjugate roots: ") + e.what());
        }
        ++r.cases;
      }
      // ω_{a,∞⁻} < ω_{a,∞}
      const PuiseuxElt& a = grp.roots[0];
      ParamVal lo = ParamVal::mono(a, QuasiCut::inf_minus()), hi = ParamVal::mono(a, QuasiCut::inf());
      ++checks;
      if (val_leq(lo, hi, 8) != Tri::Yes || val_leq(hi, lo, 8) != Tri::No) note("leaf order");
      for (int j = 0; j < 5; ++j) {
        Poly f = rand_base() * (j == 0 ? Poly::x_minus(a) : Poly::constant(PuiseuxElt(1)));
        ++checks;
        if (!cross_leq(eval(lo, f), eval(hi, f))) note("leaf values at " + f.to_string());
      }
      ++checks;
      if (cross_leq(eval(hi, Poly::x_minus(a)), eval(lo, Poly::x_minus(a)))) note("leaf strictness");
    }
  }
  r.pass = bad == 0;
  r.detail += std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks";
  return r;
}

CriterionResult c9_dictionary(Rng& g) {
  CriterionResult r = start(9, "approximation-type dictionary: classification, closure of equivalent nests, radius chain");
  long bad = 0, checks = 0;
  auto note = [&](const std::string& s) {
    ++bad;
    if (r.detail.empty()) r.detail = s + "; ";
  };
  auto rand_nest = [&]() {
    return Nest({nonzero_q(g), rq(g, -1, 1, 3), rand_px(g, 2, 1), static_cast<int>(pick(g, 0, 3))});
  };
  for (int k = 0; k < 100; ++k) {
    ++checks;
    ++r.cases;
    if (k % 10 < 3) {
      if (appr_classify(appr_from_nest(rand_nest())) != ApprClass::Immediate) note("nest classification");
      continue;
    }
    QuasiCut d = rand_radius(g, false);
    ApprClass want = d.is_elem() ? ApprClass::ResidueExtending : ApprClass::ValueExtending;
    if (appr_classify(appr_from_ball({rand_px(g, 3), d})) != want) note("ball classification at " + d.to_string());
  }
  auto ball_corpus = [&](const PuiseuxElt& a, const Rational& gam, const std::vector<PuiseuxElt>& extra) {
    std::vector<PointedBall> bs;
    for (int k = 0; k < 50; ++k) {
      const PuiseuxElt& base = extra.empty() || k % 2 ? a : extra[g() % extra.size()];
      PuiseuxElt c = k % 3 == 0 ? base : perturb(g, base, gam + rq(g, -1, 1, 4));
      Rational rad = gam + rq(g, -1, 1, 4);
      if (k % 7 == 0) rad = gam;
      bs.push_back(k % 2 ? closed_ball(c, rad) : open_ball(c, rad));
    }
    bs.push_back(closed_ball(a, gam));
    bs.push_back(open_ball(a, gam));
    return bs;
  };
  for (int k = 0; k < 20; ++k) {
    Nest n = rand_nest();
    Nest::Params p = n.params();
    if (k % 2) p.skip += static_cast<int>(pick(g, 1, 3));
    else p.offset = p.offset + PuiseuxElt::monomial(Cyclo(nonzero_q(g)), p.shift + 1 + rq(g, 0, 2, 3));
    Nest m(p);
    ++checks;
    if (!nest_equiv(n, m, 12)) note("equivalent nest pair not recognized");
    ApprType an = appr_from_nest(n), am = appr_from_nest(m);
    std::vector<PuiseuxElt> centers;
    for (int i = 0; i < 6; ++i) centers.push_back(n.center(i));
    for (const auto& b : ball_corpus(n.center(2), n.radius(2), centers)) {
      ++checks;
      if (appr_member(an, b) != appr_member(am, b)) note("closure differs at " + b.to_string());
    }
    ++r.cases;
  }
  for (int k = 0; k < 5; ++k) {
    PuiseuxElt a = rand_px(g, 3);
    Rational gam = rq(g, -1, 2, 3);
    ApprType lo = appr_from_ball({a, QuasiCut::minus(gam)}), mid = appr_from_ball({a, QuasiCut::elem(gam)}),
             hi = appr_from_ball({a, QuasiCut::plus(gam)});
    bool strict1 = false, strict2 = false;
    for (const auto& b : ball_corpus(a, gam, {})) {
      Tri x = appr_member(lo, b), y = appr_member(mid, b), z = appr_member(hi, b);
      checks += 2;
      if (x == Tri::Yes && y != Tri::Yes) note("chain lo <= mid");
      if (y == Tri::Yes && z != Tri::Yes) note("chain mid <= hi");
      strict1 = strict1 || (x == Tri::No && y == Tri::Yes);
      strict2 = strict2 || (y == Tri::No && z == Tri::Yes);
    }
    ++checks;
    if (!strict1 || !strict2) note("chain not strict");
    ++r.cases;
  }
  r.pass = bad == 0;
  r.detail += std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks";
  return r;
}

CriterionResult c10_closed_forms(Rng& g) {
  CriterionResult r = start(10, "root and leaf closed forms of the monomial formula (200 polynomials)");
  long good = 0;
  for (int k = 0; k < 200; ++k) {
    int deg = static_cast<int>(pick(g, 1, 6));
    bool base = k % 2 == 0;
    auto coeff = [&] { return base ? rand_laurent(g) : rand_px(g, 3); };
    std::vector<PuiseuxElt> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(g() % 4 ? coeff() : PuiseuxElt());
    PuiseuxElt lc;
    while (lc.is_exact_zero()) lc = coeff();
    cs.push_back(lc);
    Poly f(cs);
    bool ok = true;
    LexPair root = to_lex(eval(ParamVal::mono(rand_px(g, 2), QuasiCut::neg_inf()), f));
    ok = ok && root.k == -deg && root.gamma == *lc.val();

    PuiseuxElt a = rand_px(g, 3);
    int mult = static_cast<int>(pick(g, 0, 3));
    Poly h = f;
    while (h.eval(a).is_exact_zero()) h = h + Poly::constant(PuiseuxElt(1));
    Poly ff = Poly::x_minus(a).pow(static_cast<unsigned>(mult)) * h;
    LexPair leaf = to_lex(eval(ParamVal::mono(a, QuasiCut::inf_minus()), ff));
    ok = ok && leaf.k == mult && leaf.gamma == *h.eval(a).val();
    good += ok;
    ++r.cases;
    if (!ok && r.detail.empty()) r.detail = "mismatch at f=" + f.to_string() + "; ";
  }
  r.pass = good == r.cases;
  r.detail += ratio(good, r.cases) + " match";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::vector<int>& which) {
  std::vector<std::function<CriterionResult(Rng&)>> all{c1_oracle_agreement, c2_coincidence, c3_order_transport,
                                                         c4_weneed,          c5_group_order, c6_limits,
                                                         c7_diskoids,        c8_support,     c9_dictionary,
                                                         c10_closed_forms};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (!which.empty() && std::find(which.begin(), which.end(), id) == which.end()) continue;
    Rng g(seed * 1000003u + static_cast<std::uint64_t>(id));
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = all[static_cast<std::size_t>(id - 1)](g);
    } catch (const std::exception& e) {
      res.id = id;
      res.pass = false;
      res.detail = std::string("aborted: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(res);
  }
  return out;
}

}  // namespace valtree
