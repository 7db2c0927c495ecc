#include "valtree/valuation.hpp"

#include "valtree/errors.hpp"
#include "valtree/newton.hpp"

#include <algorithm>
#include <random>

namespace valtree {

ParamVal ParamVal::mono(PuiseuxElt center, QuasiCut radius) {
  ParamVal v;
  v.kind_ = Kind::Monomial;
  v.ball_ = {std::move(center), std::move(radius)};
  return v;
}

ParamVal ParamVal::limit(Nest nest) {
  ParamVal v;
  v.kind_ = Kind::Limit;
  v.nest_ = std::move(nest);
  return v;
}

const PointedBall& ParamVal::ball() const {
  if (kind_ != Kind::Monomial) throw DomainError("limit valuation has no single ball");
  return ball_;
}

const Nest& ParamVal::nest() const {
  if (kind_ != Kind::Limit) throw DomainError("monomial valuation has no nest");
  return nest_;
}

std::string ParamVal::to_string() const {
  if (kind_ == Kind::Limit) return nest_.to_string();
  return "mono(" + ball_.center.to_string() + ", " + ball_.radius.to_string() + ")";
}

std::vector<TermValue> monomial_terms(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f) {
  if (delta.is_inf()) throw DomainError("monomial_terms needs a quasi-cut radius");
  Poly g = f.taylor_shift(a);
  std::vector<TermValue> out;
  for (int n = 0; n <= g.degree(); ++n) {
    const PuiseuxElt& b = g.coeffs()[static_cast<std::size_t>(n)];
    if (b.is_exact_zero()) continue;
    bool known = !b.no_terms();
    Rational v = known ? b.terms().begin()->first : *b.prec();
    out.push_back({n, ExtValue::make(n, v, delta), known});
  }
  return out;
}

namespace {

ExtValue monomial_eval(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f) {
  if (f.is_zero()) return ExtValue::infinity();
  if (delta.is_inf()) {
    PuiseuxElt b0 = f.eval(a);
    RationalInf v = b0.val();
    return v ? ExtValue::rational(*v) : ExtValue::infinity();
  }
  auto terms = monomial_terms(a, delta, f);
  std::optional<ExtValue> best;
  for (const auto& t : terms)
    if (t.known && (!best || ext_cmp(t.value, *best) < 0)) best = t.value;
  if (!best) throw IndeterminateValuation("every coefficient of f(x + a) is truncated");
  for (const auto& t : terms)
    if (!t.known && ext_cmp(t.value, *best) < 0)
      throw IndeterminateValuation("truncated coefficient of degree " + std::to_string(t.n) + " may attain the minimum");
  return *best;
}

}  // namespace

std::vector<int> argmin_set(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f) {
  ExtValue m = monomial_eval(a, delta, f);
  std::vector<int> s;
  for (const auto& t : monomial_terms(a, delta, f)) {
    if (!t.known) {
      if (ext_cmp(t.value, m) <= 0) throw IndeterminateValuation("argmin set hidden by truncation");
      continue;
    }
    if (ext_cmp(t.value, m) == 0) s.push_back(t.n);
  }
  return s;
}

LimitTrace limit_eval(const Nest& n, const Poly& f, const EvalConfig& cfg) {
  LimitTrace tr;
  if (f.is_zero()) return tr;
  int cert = 0;
  if (f.degree() > 0) {
    for (const auto& r : puiseux_root_list(f, cfg.order)) {
      int i = n.escape(r);
      if (i > cfg.max_depth)
        throw StabilizationDepthExceeded("root " + r.to_string() + " stays in the nest past depth " +
                                         std::to_string(cfg.max_depth));
      cert = std::max(cert, i);
    }
  }
  for (int i = 0; i <= cert; ++i) tr.prefix.push_back(monomial_eval(n.center(i), QuasiCut::elem(n.radius(i)), f));
  tr.certificate = cert;
  tr.value = tr.prefix.back();
  return tr;
}

ExtValue eval(const ParamVal& mu, const Poly& f, const EvalConfig& cfg) {
  if (mu.is_mono()) return monomial_eval(mu.ball().center, mu.ball().radius, f);
  return limit_eval(mu.nest(), f, cfg).value;
}

namespace {

ExtValue value_at(const Poly& f, const PuiseuxElt& c) {
  // truncated Horner first; exact evaluation only when the value hides past every tried precision
  for (Rational p = 1; p <= 256; p *= 2) {
    PuiseuxElt r, ct = c.truncated(p);
    for (int k = f.degree(); k >= 0; --k) r = r * ct + f.coeff(k).truncated(p);
    if (r.no_terms()) continue;
    try {
      return ExtValue::rational(*r.val());
    } catch (const IndeterminateValuation&) {
    }
  }
  RationalInf v = f.eval(c).val();
  return v ? ExtValue::rational(*v) : ExtValue::infinity();
}

void consider(OracleResult& r, const Poly& f, const PuiseuxElt& c) {
  ExtValue v = value_at(f, c);
  ++r.evaluated;
  if (r.evaluated == 1 || ext_cmp(v, r.value) < 0) {
    r.value = v;
    r.witness = c;
  }
}

}  // namespace

OracleResult min_over_ball(const PointedBall& b, const Poly& f, int samples, std::uint64_t seed) {
  QuasiCut r = set_radius(b.radius);
  if (!r.is_elem()) throw DomainError("min_over_ball needs a radius in Γ, got " + b.radius.to_string());
  const Rational& g = r.value();
  OracleResult out;
  consider(out, f, b.center);
  for (int u = 1; u <= std::max(1, f.degree() + 1); ++u)
    consider(out, f, b.center + PuiseuxElt::monomial(Cyclo(Rational(u % 2 ? u : -u, 1)), g));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    Rational u(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 4));
    u.canonicalize();
    if (u == 0) u = 1;
    Rational beta = g + Rational(static_cast<long>(rng() % 9), static_cast<long>(1 + rng() % 3));
    beta.canonicalize();
    consider(out, f, b.center + PuiseuxElt::monomial(Cyclo(u), beta));
  }
  return out;
}

OracleResult min_over_nest(const Nest& n, const Poly& f, int upto, int samples, std::uint64_t seed) {
  OracleResult best;
  for (int i = 0; i <= upto; ++i) {
    OracleResult r = min_over_ball(n.ball(i), f, samples, seed + static_cast<std::uint64_t>(i));
    if (i == 0 || ext_cmp(r.value, best.value) > 0) best = r;
  }
  return best;
}

std::vector<Rational> rationals_above(const QuasiCut& p, int count) {
  std::vector<Rational> out;
  switch (p.kind()) {
    case QuasiCut::Kind::Minus:
      for (int k = 0; k < count; ++k) out.push_back(k == 0 ? p.value() : p.value() + Rational(1, k));
      break;
    case QuasiCut::Kind::Elem:
    case QuasiCut::Kind::Plus:
      for (int k = 0; k < count; ++k) out.push_back(p.value() + Rational(1, k + 1));
      break;
    case QuasiCut::Kind::NegInf:
      for (int k = 0; k < count; ++k) out.push_back(Rational(count - 2 * k));
      break;
    case QuasiCut::Kind::Real: {
      RealAlgebraic r = p.algebraic();
      Rational w = r.hi() - r.lo();
      for (int k = 0; k < count; ++k) {
        r = r.refined(w / 2);
        w = r.hi() - r.lo();
        if (out.empty() || r.hi() < out.back()) out.push_back(r.hi());
        else --k;
      }
      break;
    }
    case QuasiCut::Kind::InfMinus:
    case QuasiCut::Kind::Inf: break;
  }
  return out;
}

Rational rational_between(const QuasiCut& cut, const Rational& bound) {
  if (in_left(bound, cut)) throw DomainError("bound " + to_string(bound) + " is not above " + cut.to_string());
  switch (cut.kind()) {
    case QuasiCut::Kind::NegInf: return bound - 1;
    case QuasiCut::Kind::Plus: return (cut.value() + bound) / 2;
    case QuasiCut::Kind::Elem: return (cut.value() + bound) / 2;
    case QuasiCut::Kind::Minus: return cut.value();
    case QuasiCut::Kind::Real: {
      RealAlgebraic r = cut.algebraic();
      while (!(r.hi() < bound)) r = r.refined((r.hi() - r.lo()) / 2);
      return r.hi();
    }
    default: throw DomainError("no rational above " + cut.to_string());
  }
}

WeneedReport weneed_check(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f, int xi_samples,
                          std::uint64_t seed) {
  if (delta.is_inf()) throw DomainError("weneed_check needs a quasi-cut radius");
  if (f.is_zero()) throw DomainError("weneed_check needs f nonzero");
  WeneedReport rep;
  rep.value = monomial_eval(a, delta, f);
  rep.s = argmin_set(a, delta, f);
  bool zero_in_s = std::find(rep.s.begin(), rep.s.end(), 0) != rep.s.end();
  PointedBall ball{a, delta};

  if (zero_in_s || delta.is_elem()) {
    rep.which = 'a';
    OracleResult m;
    if (delta.is_elem() || delta.kind() == QuasiCut::Kind::Minus) {
      m = min_over_ball(ball, f, 8, seed);
    } else {
      // min(V) = v̄(f(a)); sample the ball to confirm nothing smaller appears
      m.value = value_at(f, a);
      m.witness = a;
      for (const Rational& beta : rationals_above(delta, 6)) {
        for (int u = 1; u <= f.degree() + 1; ++u) {
          PuiseuxElt c = a + PuiseuxElt::monomial(Cyclo(u), beta);
          consider(m, f, c);
        }
      }
    }
    rep.min_v = m.value;
    rep.checks = m.evaluated;
    rep.ok = same_value(rep.value, m.value);
    rep.detail = "eval " + rep.value.to_string() + " vs min(V) " + m.value.to_string();
    return rep;
  }
  if (rep.s.size() != 1) {
    rep.detail = "argmin set has several indices although delta is not in Gamma";
    return rep;
  }
  int n0 = rep.s.front();
  Poly g = f.taylor_shift(a);
  Rational v0 = *g.coeffs()[static_cast<std::size_t>(n0)].val();

  if (delta.kind() == QuasiCut::Kind::Minus) {
    rep.which = 'b';
    OracleResult m = min_over_ball(ball, f, 8, seed);
    rep.min_v = m.value;
    if (m.value.is_inf()) {
      rep.detail = "min(V) is infinite";
      return rep;
    }
    const Rational& mv = m.value.gamma();
    bool ok = position_in_gamma(rep.value) == QuasiCut::minus(mv);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 20; ++k) {
      Rational off(static_cast<long>(rng() % 40) - 20, static_cast<long>(1 + rng() % 7));
      off.canonicalize();
      if (k == 0) off = 0;
      Rational q = mv + off;
      auto c = ext_cmp(ExtValue::rational(q), rep.value);
      bool right_side = q < mv ? c < 0 : c > 0;
      ok = ok && right_side;
      ++rep.checks;
    }
    rep.ok = ok;
    rep.detail = "eval " + rep.value.to_string() + " strictly realizes " + to_string(mv) + "-";
    return rep;
  }

  if (!is_essential(delta)) {
    rep.detail = "radius is neither in Gamma, a gamma-minus, nor essential";
    return rep;
  }
  rep.which = 'c';
  // α = min over n < n0 of (v̄(a_n) − v̄(a_{n0}))/(n0 − n)
  std::optional<Rational> alpha;
  for (int n = 0; n < n0; ++n) {
    const PuiseuxElt& b = g.coeffs()[static_cast<std::size_t>(n)];
    if (b.is_exact_zero()) continue;
    Rational q = (*b.val() - v0) / (n0 - n);
    if (!alpha || q < *alpha) alpha = q;
  }
  QuasiCut pos = position_in_gamma(rep.value);
  std::vector<Rational> xis = rationals_above(pos, xi_samples);
  if (xis.empty()) {
    rep.detail = "no element of Gamma lies above " + rep.value.to_string() + ", so inf(V) cannot be approached";
    return rep;
  }
  bool ok = true;
  for (const Rational& xi : xis) {
    Rational gam = (xi - v0) / n0;
    Rational bound = alpha && *alpha < gam ? *alpha : gam;
    Rational beta = rational_between(delta, bound);
    PuiseuxElt c = a + PuiseuxElt::t_pow(beta);
    ExtValue vc = value_at(f, c);
    bool good = contains(ball, c) && ext_cmp(rep.value, vc) < 0 && ext_cmp(vc, ExtValue::rational(xi)) < 0;
    ok = ok && good;
    ++rep.checks;
    rep.witness = c.to_string();
  }
  rep.ok = ok;
  rep.detail = "eval " + rep.value.to_string() + " is the infimum of V: " + std::to_string(rep.checks) + " witnesses";
  return rep;
}

Tri val_leq(const ParamVal& mu, const ParamVal& nu, int depth) {
  if (mu.is_mono() && nu.is_mono()) return pointed_leq(mu.ball(), nu.ball()) ? Tri::Yes : Tri::No;
  if (mu.is_mono()) return ball_below_nest(mu.ball(), nu.nest(), depth);
  if (!nu.is_mono()) return nest_equiv(mu.nest(), nu.nest(), depth) ? Tri::Yes : Tri::No;
  return Tri::No;
}

const char* to_string(ValClass c) {
  switch (c) {
    case ValClass::ResidueTranscendental: return "ResidueTranscendental";
    case ValClass::ValueTranscendental: return "ValueTranscendental";
    case ValClass::ValuationAlgebraic: return "ValuationAlgebraic";
    case ValClass::NontrivialSupport: return "NontrivialSupport";
  }
  return "";
}

ValClass classify(const ParamVal& mu) {
  if (!mu.is_mono()) return ValClass::ValuationAlgebraic;
  const QuasiCut& r = mu.ball().radius;
  if (r.is_inf()) return ValClass::NontrivialSupport;
  if (r.is_elem()) return ValClass::ResidueTranscendental;
  return ValClass::ValueTranscendental;
}

Poly distinguishing_witness(const PointedBall& b, const PointedBall& c) {
  if (ball_eq(b, c)) throw DomainError("distinguishing_witness needs distinct pointed balls");
  std::vector<PuiseuxElt> cands{b.center, c.center};
  for (const PointedBall* p : {&b, &c}) {
    for (const Rational& beta : rationals_above(position_in_gamma(ExtValue::make(1, 0, p->radius)), 3))
      cands.push_back(p->center + PuiseuxElt::t_pow(beta));
  }
  std::optional<Poly> fallback;
  for (const auto& x : cands) {
    Poly f = Poly::x_minus(x);
    ExtValue vb = monomial_eval(b.center, b.radius, f);
    ExtValue vc = monomial_eval(c.center, c.radius, f);
    if (!cross_leq(vb, vc)) return f;
    if (!fallback && !same_value(vb, vc)) fallback = f;
  }
  if (fallback) return *fallback;
  throw WitnessUnavailable("no degree-one witness separates " + b.to_string() + " and " + c.to_string());
}

}  // namespace valtree
