#include "valtree/cuts.hpp"

#include "valtree/errors.hpp"

namespace valtree {

namespace {

std::strong_ordering from_int(int c) {
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

RealAlgebraic::RealAlgebraic(QPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 2) throw DomainError("real cut needs a polynomial of degree >= 2");
  if (!(lo_ < hi_)) throw DomainError("real cut needs lo < hi");
  sqfree_ = poly_.squarefree();
  if (sqfree_.sign_at(lo_) == 0 || sqfree_.sign_at(hi_) == 0)
    throw DomainError("real cut interval endpoint is a root");
  if (sqfree_.count_roots(lo_, hi_) != 1) throw DomainError("real cut interval must isolate exactly one root");
  for (const auto& [q, mult] : sqfree_.rational_roots())
    if (lo_ < q && q < hi_) throw DomainError("real cut root " + q.get_str() + " is rational");
  sign_lo_ = sqfree_.sign_at(lo_);
}

RealAlgebraic::RealAlgebraic(QPoly poly, QPoly sqfree, Rational lo, Rational hi, Unchecked)
    : poly_(std::move(poly)), sqfree_(std::move(sqfree)), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_lo_ = sqfree_.sign_at(lo_);
}

RealAlgebraic RealAlgebraic::bisected() const {
  Rational mid = (lo_ + hi_) / 2;
  if (sqfree_.sign_at(mid) == sign_lo_) return RealAlgebraic(poly_, sqfree_, mid, hi_, Unchecked{});
  return RealAlgebraic(poly_, sqfree_, lo_, mid, Unchecked{});
}

RealAlgebraic RealAlgebraic::refined(const Rational& width) const {
  if (width <= 0) throw DomainError("refinement width must be positive");
  RealAlgebraic r = *this;
  while (r.hi_ - r.lo_ >= width) r = r.bisected();
  return r;
}

RealAlgebraic RealAlgebraic::affine(const Rational& m, const Rational& g) const {
  if (m == 0) throw DomainError("affine map with zero scale");
  Rational a = m * lo_ + g, b = m * hi_ + g;
  if (m < 0) std::swap(a, b);
  return RealAlgebraic(poly_.affine_image(m, g), sqfree_.affine_image(m, g), a, b, Unchecked{});
}

std::strong_ordering RealAlgebraic::compare(const Rational& q) const {
  if (q <= lo_) return std::strong_ordering::greater;
  if (q >= hi_) return std::strong_ordering::less;
  return sqfree_.sign_at(q) == sign_lo_ ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering RealAlgebraic::compare(const RealAlgebraic& other) const {
  QPoly g = gcd(sqfree_, other.sqfree_);
  if (g.degree() >= 1) {
    Rational a = lo_ > other.lo_ ? lo_ : other.lo_;
    Rational b = hi_ < other.hi_ ? hi_ : other.hi_;
    if (a < b && g.count_roots(a, b) > 0) return std::strong_ordering::equal;
  }
  RealAlgebraic x = *this, y = other;
  for (;;) {
    if (x.hi_ <= y.lo_) return std::strong_ordering::less;
    if (y.hi_ <= x.lo_) return std::strong_ordering::greater;
    if (x.hi_ - x.lo_ >= y.hi_ - y.lo_)
      x = x.bisected();
    else
      y = y.bisected();
  }
}

QuasiCut QuasiCut::real(RealAlgebraic r) {
  QuasiCut q(Kind::Real);
  q.real_ = std::make_shared<const RealAlgebraic>(std::move(r));
  return q;
}

QuasiCut QuasiCut::real(const QPoly& p, const Rational& lo, const Rational& hi) {
  return real(RealAlgebraic(p, lo, hi));
}

const Rational& QuasiCut::value() const {
  if (kind_ != Kind::Minus && kind_ != Kind::Elem && kind_ != Kind::Plus)
    throw DomainError("quasi-cut " + to_string() + " has no rational anchor");
  return value_;
}

const RealAlgebraic& QuasiCut::algebraic() const {
  if (kind_ != Kind::Real) throw DomainError("quasi-cut " + to_string() + " is not a real cut");
  return *real_;
}

QuasiCut QuasiCut::affine(const Rational& m, const Rational& g) const {
  if (m == 0) throw DomainError("affine map with zero scale");
  bool flip = m < 0;
  switch (kind_) {
    case Kind::NegInf: return flip ? inf_minus() : neg_inf();
    case Kind::InfMinus: return flip ? neg_inf() : inf_minus();
    case Kind::Inf:
      if (flip) throw DomainError("cannot reflect the radius inf");
      return inf();
    case Kind::Elem: return elem(m * value_ + g);
    case Kind::Minus: return flip ? plus(m * value_ + g) : minus(m * value_ + g);
    case Kind::Plus: return flip ? minus(m * value_ + g) : plus(m * value_ + g);
    case Kind::Real: return real(real_->affine(m, g));
  }
  return *this;
}

std::string QuasiCut::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::InfMinus: return "inf-";
    case Kind::Inf: return "inf";
    case Kind::Elem: return valtree::to_string(value_);
    case Kind::Minus: return valtree::to_string(value_) + "-";
    case Kind::Plus: return valtree::to_string(value_) + "+";
    case Kind::Real:
      return "real(" + real_->poly().to_string('y') + ", " + valtree::to_string(real_->lo()) + ", " +
             valtree::to_string(real_->hi()) + ")";
  }
  return {};
}

namespace {

int rank(QuasiCut::Kind k) {
  switch (k) {
    case QuasiCut::Kind::NegInf: return 0;
    case QuasiCut::Kind::InfMinus: return 2;
    case QuasiCut::Kind::Inf: return 3;
    default: return 1;
  }
}

int tag(QuasiCut::Kind k) {
  switch (k) {
    case QuasiCut::Kind::Minus: return -1;
    case QuasiCut::Kind::Plus: return 1;
    default: return 0;
  }
}

}  // namespace

std::strong_ordering operator<=>(const QuasiCut& a, const QuasiCut& b) {
  int ra = rank(a.kind_), rb = rank(b.kind_);
  if (ra != rb || ra != 1) return ra <=> rb;
  bool areal = a.kind_ == QuasiCut::Kind::Real, breal = b.kind_ == QuasiCut::Kind::Real;
  std::strong_ordering anchor = std::strong_ordering::equal;
  if (areal && breal)
    anchor = a.real_->compare(*b.real_);
  else if (areal)
    anchor = a.real_->compare(b.value_);
  else if (breal)
    anchor = 0 <=> b.real_->compare(a.value_);
  else
    anchor = from_int(cmp(a.value_, b.value_));
  if (anchor != 0) return anchor;
  return tag(a.kind_) <=> tag(b.kind_);
}

std::strong_ordering qcut_cmp(const QuasiCut& a, const QuasiCut& b) { return a <=> b; }

bool in_left(const Rational& g, const QuasiCut& d) {
  switch (d.kind()) {
    case QuasiCut::Kind::NegInf: return false;
    case QuasiCut::Kind::Minus: return g < d.value();
    case QuasiCut::Kind::Elem:
    case QuasiCut::Kind::Plus: return g <= d.value();
    case QuasiCut::Kind::Real: return d.algebraic().compare(g) == std::strong_ordering::greater;
    case QuasiCut::Kind::InfMinus:
    case QuasiCut::Kind::Inf: return true;
  }
  return false;
}

bool is_essential(const QuasiCut& d) {
  switch (d.kind()) {
    case QuasiCut::Kind::Real:
    case QuasiCut::Kind::Plus:
    case QuasiCut::Kind::NegInf:
    case QuasiCut::Kind::InfMinus: return true;
    default: return false;
  }
}

bool radius_admits(const RationalInf& v, const QuasiCut& d) {
  if (!v) return true;
  if (d.is_inf()) return false;
  if (d.is_elem()) return *v >= d.value();
  return !in_left(*v, d);
}

QuasiCut set_radius(const QuasiCut& d) {
  if (d.kind() == QuasiCut::Kind::Minus) return QuasiCut::elem(d.value());
  if (d.is_inf()) return QuasiCut::inf_minus();
  return d;
}

}  // namespace valtree
