#include "doctest.h"
#include "valtree/errors.hpp"
#include "valtree/parse.hpp"
#include "valtree/valuation.hpp"

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
PuiseuxElt px(const char* s) { return parse_puiseux(s); }
Poly poly(const char* s) { return parse_poly(s); }
ParamVal mono(const char* c, const char* r) { return ParamVal::mono(px(c), parse_radius(r)); }
}  // namespace

TEST_CASE("monomial evaluation") {
  CHECK(same_value(eval(mono("0", "1/2"), poly("x^2 - t")), ExtValue::rational(1)));
  auto v = eval(mono("0", "1+"), poly("x - t^2"));
  CHECK(v.m() == 1);
  CHECK(v.gamma() == 0);
  CHECK(same_value(eval(mono("0", "1+"), poly("x - 1")), ExtValue::rational(0)));
  CHECK(same_value(eval(mono("0", "inf"), poly("x^2 - t")), ExtValue::rational(1)));
  CHECK(eval(mono("t", "inf"), poly("x^2 - t^2")).is_inf());
  auto root = eval(mono("0", "-inf"), poly("t*x^3 + x"));
  auto lex = to_lex(root);
  CHECK(lex.k == -3);
  CHECK(lex.gamma == 1);
  // root 0 of multiplicity 2, in-coefficient t^3
  auto leaf = to_lex(eval(mono("0", "inf-"), poly("t^3*x^2 + x^4")));
  CHECK(leaf.k == 2);
  CHECK(leaf.gamma == 3);
}

TEST_CASE("limit valuation over the canonical nest") {
  auto tr = limit_eval(Nest::canonical(), poly("x"));
  CHECK(same_value(tr.value, ExtValue::rational(q(1, 2))));
  for (const auto& v : tr.prefix) CHECK(same_value(v, ExtValue::rational(q(1, 2))));
  auto tr2 = limit_eval(Nest::canonical(), poly("x - t^(1/2) - t^(2/3) - t^(3/4)"));
  CHECK(tr2.certificate == 3);
  CHECK(same_value(tr2.value, ExtValue::rational(q(4, 5))));
  for (std::size_t i = 1; i < tr2.prefix.size(); ++i) CHECK(ext_cmp(tr2.prefix[i - 1], tr2.prefix[i]) <= 0);
  EvalConfig shallow;
  shallow.max_depth = 2;
  CHECK_THROWS_AS(limit_eval(Nest::canonical(), poly("x - t^(1/2) - t^(2/3) - t^(3/4)"), shallow),
                  StabilizationDepthExceeded);
}

TEST_CASE("brute-force minimum over a ball") {
  auto r = min_over_ball({px("0"), parse_radius("1/2")}, poly("x^2 - t"));
  CHECK(same_value(r.value, ExtValue::rational(1)));
  auto r2 = min_over_ball({px("t + 3"), parse_radius("5/3")}, poly("x - t - 3"));
  CHECK(same_value(r2.value, ExtValue::rational(q(5, 3))));
  auto n = min_over_nest(Nest::canonical(), poly("x"), 6);
  CHECK(same_value(n.value, ExtValue::rational(q(1, 2))));
}

TEST_CASE("the three cases of the minimum/infimum proposition") {
  auto a = weneed_check(px("0"), parse_radius("1/2"), poly("x^2 - t"));
  CHECK(a.which == 'a');
  CHECK(a.ok);
  auto b = weneed_check(px("0"), parse_radius("1/2-"), poly("x^2"));
  CHECK(b.which == 'b');
  CHECK(b.ok);
  CHECK(same_value(*b.min_v, ExtValue::rational(1)));
  CHECK(b.value.m() == 2);
  auto c = weneed_check(px("0"), parse_radius("real(y^2 - 2, 1, 2)"), poly("x"));
  CHECK(c.which == 'c');
  CHECK(c.ok);
  auto c2 = weneed_check(px("t"), parse_radius("1/3+"), poly("(x - t)^2 + t^3*(x - t)"));
  CHECK(c2.which == 'c');
  CHECK(c2.ok);
  auto c3 = weneed_check(px("0"), parse_radius("-inf"), poly("x^3 + t"));
  CHECK(c3.which == 'c');
  CHECK(c3.ok);
  // B(a, inf-) = {a}: V = {inf} has no infimum below inf in the value group
  auto leaf = weneed_check(px("0"), parse_radius("inf-"), poly("x^2 + t*x"));
  CHECK(leaf.which == 'c');
  CHECK_FALSE(leaf.ok);
}

TEST_CASE("order between parametrized valuations") {
  CHECK(val_leq(mono("0", "1/2"), mono("t", "1"), 8) == Tri::Yes);
  CHECK(val_leq(mono("0", "1-"), mono("0", "1"), 8) == Tri::Yes);
  CHECK(val_leq(mono("0", "1"), mono("0", "1+"), 8) == Tri::Yes);
  CHECK(val_leq(mono("0", "1+"), mono("0", "1"), 8) == Tri::No);
  CHECK(val_leq(mono("5", "-inf"), mono("t", "inf"), 8) == Tri::Yes);
  CHECK(val_leq(mono("t", "inf-"), mono("t", "inf"), 8) == Tri::Yes);
  CHECK(val_leq(mono("t", "inf"), mono("t", "inf-"), 8) == Tri::No);
  CHECK(val_leq(mono("0", "1/4"), ParamVal::limit(Nest::canonical()), 8) == Tri::Yes);
  CHECK(val_leq(ParamVal::limit(Nest::canonical()), mono("0", "1/4"), 8) == Tri::No);
}

TEST_CASE("classification") {
  CHECK(classify(mono("0", "1/2")) == ValClass::ResidueTranscendental);
  CHECK(classify(mono("0", "real(y^2 - 2, 1, 2)")) == ValClass::ValueTranscendental);
  CHECK(classify(ParamVal::limit(Nest::canonical())) == ValClass::ValuationAlgebraic);
  CHECK(classify(mono("0", "inf")) == ValClass::NontrivialSupport);
}

TEST_CASE("degree-one witnesses") {
  PointedBall b{px("0"), parse_radius("1+")}, c{px("t"), parse_radius("1+")};
  Poly w = distinguishing_witness(b, c);
  CHECK(w.degree() == 1);
  CHECK_FALSE(same_value(eval(ParamVal::mono(b.center, b.radius), w), eval(ParamVal::mono(c.center, c.radius), w)));
  PointedBall m{px("t"), parse_radius("2-")}, e{px("t"), parse_radius("2")};
  Poly w2 = distinguishing_witness(e, m);
  CHECK(w2 == Poly::x_minus(px("t")));
  CHECK_THROWS_AS(distinguishing_witness(b, b), DomainError);
}
