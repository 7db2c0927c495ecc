#include "valtree/balls.hpp"

#include "valtree/errors.hpp"

namespace valtree {

std::string PointedBall::to_string() const { return "ball(" + center.to_string() + ", " + radius.to_string() + ")"; }

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool contains(const PointedBall& b, const PuiseuxElt& c) {
  PuiseuxElt d = c - b.center;
  if (!d.no_terms() || d.is_exact()) return radius_admits(d.val(), b.radius);
  // v̄(d) ≥ prec, and admitted radii sets are upward closed
  if (radius_admits(*d.prec(), b.radius)) return true;
  throw IndeterminateValuation("membership in " + b.to_string() + " hidden by " + d.to_string());
}

bool ball_eq(const PointedBall& b, const PointedBall& c) { return b.radius == c.radius && contains(b, c.center); }

bool pointed_leq(const PointedBall& b, const PointedBall& c) { return b.radius <= c.radius && contains(b, c.center); }

bool ball_superset(const PointedBall& b, const PointedBall& c) {
  return set_radius(b.radius) <= set_radius(c.radius) && contains(b, c.center);
}

Nest::Nest(Params p) : p_(std::move(p)) {
  if (p_.scale == 0) throw DomainError("nest scale must be nonzero");
  if (p_.skip < 0) throw DomainError("nest skip must be nonnegative");
  if (!p_.offset.is_exact()) throw DomainError("nest offset must be exact");
}

PuiseuxElt Nest::center(int i) const {
  if (i < 0) throw DomainError("negative nest index");
  int k = i + 2 + p_.skip;
  PuiseuxElt::Terms terms;
  for (int n = 2; n <= k; ++n) terms.emplace(p_.shift + 1 - Rational(1, n), Cyclo(p_.scale));
  return p_.offset + PuiseuxElt(std::move(terms), std::nullopt);
}

Rational Nest::radius(int i) const {
  int k = i + 2 + p_.skip;
  return p_.shift + 1 - Rational(1, k + 1);
}

int Nest::escape(const PuiseuxElt& c) const {
  // Terminates: c has finitely many terms below its precision, and membership in
  // B_i for large i forces a term at exponent shift + 1 − 1/n for every n ≤ k.
  for (int i = 0; i < 1000000; ++i)
    if (!contains(ball(i), c)) return i;
  throw StabilizationDepthExceeded("escape search exhausted");
}

std::string Nest::to_string() const {
  return "nest(canonical, scale=" + valtree::to_string(p_.scale) + ", shift=" + valtree::to_string(p_.shift) +
         ", offset=" + p_.offset.to_string() + ", skip=" + std::to_string(p_.skip) + ")";
}

bool operator==(const Nest& a, const Nest& b) {
  return a.p_.scale == b.p_.scale && a.p_.shift == b.p_.shift && a.p_.offset == b.p_.offset && a.p_.skip == b.p_.skip;
}

bool nest_check(const Nest& n, int depth) {
  if (depth < 1) throw DomainError("nest_check depth must be at least 1");
  for (int i = 0; i + 1 < depth; ++i) {
    if (!(n.radius(i + 1) > n.radius(i)) || !contains(n.ball(i), n.center(i + 1)))
      throw DescentViolation("nest fails strict descent at index " + std::to_string(i));
  }
  return true;
}

namespace {

bool each_contains_some(const Nest& n, const Nest& m, int depth) {
  for (int i = 0; i < depth; ++i) {
    PointedBall b = n.ball(i);
    bool found = false;
    for (int j = 0; j < 2 * depth + 4 && !found; ++j) found = ball_superset(b, m.ball(j));
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool nest_equiv(const Nest& n, const Nest& m, int depth) {
  if (depth < 1) throw DomainError("nest_equiv depth must be at least 1");
  return each_contains_some(n, m, depth) && each_contains_some(m, n, depth);
}

Tri ball_below_nest(const PointedBall& b, const Nest& n, int depth) {
  auto below = [&](int i) { return radius_admits(n.radius(i), b.radius) && contains(b, n.center(i)); };
  int i0;
  try {
    i0 = n.escape(b.center);
  } catch (const IndeterminateValuation&) {
    for (int i = 0; i < depth; ++i)
      if (below(i)) return Tri::Yes;
    return Tri::Unknown;
  }
  // If B_i ⊆ under(B) for some i > i0, then under(B) meets B_{i0} without lying inside it
  // (its center escapes), so it contains B_{i0}; checking i ≤ i0 is complete.
  for (int i = 0; i <= i0; ++i)
    if (below(i)) return Tri::Yes;
  return Tri::No;
}

}  // namespace valtree
