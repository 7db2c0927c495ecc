#include "valtree/diskoids.hpp"

#include "valtree/errors.hpp"
#include "valtree/valuation.hpp"

#include <random>

namespace valtree {

namespace {

// v̄(d) or a lower bound for it, with a flag telling which.
std::pair<RationalInf, bool> val_or_bound(const PuiseuxElt& d) {
  if (!d.no_terms() || d.is_exact()) return {d.val(), true};
  return {d.prec(), false};
}

bool left_of(const RationalInf& w, const QuasiCut& d) { return w && in_left(*w, d); }

std::vector<RationalInf> distances(const std::vector<PuiseuxElt>& roots, std::size_t r) {
  std::vector<RationalInf> w;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == r) {
      w.push_back(std::nullopt);
      continue;
    }
    auto [v, exact] = val_or_bound(roots[r] - roots[j]);
    if (!exact) throw IndeterminateValuation("roots too close to separate at this order");
    w.push_back(v);
  }
  return w;
}

}  // namespace

std::string Diskoid::to_string() const {
  std::string out = "diskoid({";
  for (std::size_t i = 0; i < roots.size(); ++i) out += (i ? ", " : "") + roots[i].to_string();
  return out + "}, " + radius.to_string() + ")";
}

Diskoid diskoid_of_poly(const Poly& f, const QuasiCut& radius, const Rational& order) {
  Diskoid d;
  d.roots = puiseux_root_list(f, order);
  d.lc_val = *f.lc().val();
  for (const auto& r : d.roots) d.e = lcm_int(d.e, r.ramification());
  d.radius = radius;
  return d;
}

bool disk_member(const Diskoid& d, const PuiseuxElt& c) {
  RationalInf sum = d.lc_val;
  bool exact = true;
  for (const auto& r : d.roots) {
    auto [v, ex] = val_or_bound(c - r);
    exact = exact && ex;
    sum = add(sum, v);
  }
  if (radius_admits(sum, d.radius)) return true;
  if (exact) return false;
  throw IndeterminateValuation("diskoid membership hidden by truncated roots");
}

QuasiCut distance_profile(const std::vector<PuiseuxElt>& roots, std::size_t r, const QuasiCut& d) {
  long k = 0;
  Rational c = 0;
  for (const auto& w : distances(roots, r)) {
    if (left_of(w, d)) c += *w;
    else ++k;
  }
  return d.affine(Rational(k), c);
}

QuasiCut inverse_profile(const std::vector<PuiseuxElt>& roots, std::size_t r, const QuasiCut& d) {
  long k = 0;
  Rational c = 0;
  std::vector<RationalInf> ws = distances(roots, r);
  for (const auto& w : ws) {
    if (!w) {
      ++k;
      continue;
    }
    // S_r(w) compared against d decides which linear piece d falls on
    Rational sw = 0;
    for (const auto& u : ws) sw += u && *u < *w ? *u : *w;
    if (in_left(sw, d)) c += *w;
    else ++k;
  }
  return d.affine(Rational(1, k), -c / k);
}

std::vector<PointedBall> skeleton(const Diskoid& d) {
  std::vector<PointedBall> out;
  QuasiCut shifted = d.radius.affine(1, -d.lc_val);
  for (std::size_t i = 0; i < d.roots.size(); ++i) out.push_back({d.roots[i], inverse_profile(d.roots, i, shifted)});
  return out;
}

Diskoid orbit_to_diskoid(const PointedBall& b, const Poly& f, const Rational& order) {
  for (const auto& g : puiseux_roots(f, order)) {
    for (std::size_t i = 0; i < g.roots.size(); ++i) {
      if (!(g.roots[i] == b.center)) continue;
      Diskoid d;
      d.roots = g.roots;
      d.e = g.e;
      d.radius = distance_profile(g.roots, i, b.radius);
      return d;
    }
  }
  throw CenterNotRoot("center " + b.center.to_string() + " is not a root of " + f.to_string());
}

Diskoid orbit_to_diskoid(const Poly& f, std::size_t root_index, const QuasiCut& radius, const Rational& order) {
  std::size_t k = root_index;
  for (const auto& g : puiseux_roots(f, order)) {
    if (k < g.size()) return orbit_to_diskoid(PointedBall{g.roots[k], radius}, f, order);
    k -= g.size();
  }
  throw CenterNotRoot("root index " + std::to_string(root_index) + " out of range for " + f.to_string());
}

PuiseuxElt sample_in_ball(const PointedBall& b, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  state = rng();
  if (b.radius.is_inf() || b.radius.kind() == QuasiCut::Kind::InfMinus) return b.center;
  std::vector<Rational> betas = rationals_above(position_in_gamma(ExtValue::make(1, 0, b.radius)), 6);
  if (b.radius.is_elem()) betas.insert(betas.begin(), b.radius.value());
  Rational beta = betas[rng() % betas.size()] + Rational(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
  Rational u(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  u.canonicalize();
  if (u == 0) u = 1;
  // sometimes land exactly on the boundary radius
  if (rng() % 3 == 0) beta = betas.front();
  return b.center + PuiseuxElt::monomial(Cyclo(u), beta);
}

bool disk_leq(const Diskoid& d, const Diskoid& e, int samples, std::uint64_t seed) {
  if (!(d.radius <= e.radius)) return false;
  std::vector<PointedBall> outer = skeleton(d), inner = skeleton(e);
  bool inside = true;
  for (const auto& s : inner) {
    bool found = false;
    for (const auto& r : outer) found = found || ball_superset(r, s);
    inside = inside && found;
  }
  std::uint64_t state = seed;
  for (int k = 0; k < samples; ++k) {
    const PointedBall& s = inner[static_cast<std::size_t>(k) % inner.size()];
    PuiseuxElt c = sample_in_ball(s, state);
    if (!disk_member(e, c)) throw Error("diskoid skeleton disagrees with membership at " + c.to_string());
    if (inside && !disk_member(d, c)) throw Error("skeleton containment contradicted by sample " + c.to_string());
  }
  return inside;
}

RationalInf support_val(const RootGroup& group, const Poly& g) {
  if (group.roots.empty()) throw DomainError("empty root group");
  RationalInf v = g.eval(group.roots.front()).val();
  for (std::size_t i = 1; i < group.roots.size(); ++i) {
    RationalInf w = g.eval(group.roots[i]).val();
    if (compare(v, w) != 0)
      throw Error("v_F depends on the root: " + to_string(v) + " vs " + to_string(w));
  }
  return v;
}

}  // namespace valtree
