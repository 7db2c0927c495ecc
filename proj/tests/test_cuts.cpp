#include "doctest.h"
#include "valtree/cuts.hpp"
#include "valtree/errors.hpp"
#include "valtree/ordgroup.hpp"

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
QuasiCut sqrt2() { return QuasiCut::real(QPoly({q(-2), q(0), q(1)}), q(1), q(2)); }
}

TEST_CASE("left sets of quasi-cuts") {
  CHECK(in_left(q(1, 2), QuasiCut::plus(q(1, 2))));
  CHECK_FALSE(in_left(q(1, 2), QuasiCut::minus(q(1, 2))));
  CHECK(in_left(q(1, 2), QuasiCut::elem(q(1, 2))));
  CHECK(in_left(q(141, 100), sqrt2()));
  CHECK_FALSE(in_left(q(142, 100), sqrt2()));
  CHECK_FALSE(in_left(q(-1000), QuasiCut::neg_inf()));
  CHECK(in_left(q(1000), QuasiCut::inf_minus()));
}

TEST_CASE("quasi-cut order") {
  CHECK(qcut_cmp(sqrt2(), QuasiCut::plus(q(7, 5))) > 0);
  CHECK(QuasiCut::minus(q(1)) < QuasiCut::elem(q(1)));
  CHECK(QuasiCut::elem(q(1)) < QuasiCut::plus(q(1)));
  CHECK(QuasiCut::plus(q(1)) < QuasiCut::minus(q(1001, 1000)));
  CHECK(QuasiCut::inf_minus() < QuasiCut::inf());
  CHECK(QuasiCut::neg_inf() < QuasiCut::minus(q(-100000)));
  CHECK(sqrt2() == QuasiCut::real(QPoly({q(-2), q(0), q(1)}), q(0), q(3)));
  CHECK(sqrt2() == QuasiCut::real(QPoly({q(4), q(0), q(-4), q(0), q(1)}), q(1), q(3, 2)));
}

TEST_CASE("real cut validation") {
  CHECK_THROWS_AS(QuasiCut::real(QPoly({q(-4), q(0), q(1)}), q(1), q(3)), DomainError);
  CHECK_THROWS_AS(QuasiCut::real(QPoly({q(-2), q(0), q(1)}), q(-2), q(2)), DomainError);
}

TEST_CASE("affine images flip under negative scale") {
  CHECK(QuasiCut::plus(q(1)).affine(q(-1), q(0)) == QuasiCut::minus(q(-1)));
  CHECK(QuasiCut::neg_inf().affine(q(-2), q(3)) == QuasiCut::inf_minus());
  CHECK(QuasiCut::plus(q(1, 2)).affine(q(2), q(0)) == QuasiCut::plus(q(1)));
  auto r = sqrt2().affine(q(2), q(1));
  CHECK(in_left(q(382, 100), r));
  CHECK_FALSE(in_left(q(383, 100), r));
}

TEST_CASE("radius admission and set radius") {
  CHECK(radius_admits(q(1), QuasiCut::elem(q(1))));
  CHECK_FALSE(radius_admits(q(1), QuasiCut::plus(q(1))));
  CHECK(radius_admits(q(1), QuasiCut::minus(q(1))));
  CHECK(radius_admits(std::nullopt, QuasiCut::inf()));
  CHECK_FALSE(radius_admits(q(100), QuasiCut::inf()));
  CHECK_FALSE(radius_admits(q(100), QuasiCut::inf_minus()));
  CHECK(set_radius(QuasiCut::minus(q(2))) == QuasiCut::elem(q(2)));
  CHECK(set_radius(QuasiCut::inf()) == QuasiCut::inf_minus());
}

TEST_CASE("extended group comparisons") {
  auto d = QuasiCut::plus(q(1, 2));
  CHECK(ext_cmp(ExtValue::make(2, q(0), d), ExtValue::rational(q(1))) > 0);
  CHECK(ext_cmp(ExtValue::make(1, q(0), d), ExtValue::rational(q(1, 2))) > 0);
  CHECK(ext_cmp(ExtValue::make(1, q(0), d), ExtValue::rational(q(501, 1000))) < 0);
  CHECK(ext_cmp(ExtValue::make(-1, q(1), d), ExtValue::rational(q(1, 2))) < 0);
  CHECK(ext_cmp(ExtValue::make(3, q(0), d), ExtValue::infinity()) < 0);
  CHECK_THROWS_AS(ext_cmp(ExtValue::make(1, q(0), d), ExtValue::make(1, q(0), QuasiCut::plus(q(1)))), DomainError);
  auto lex = to_lex(ExtValue::make(3, q(1), QuasiCut::neg_inf()));
  CHECK(lex.k == -3);
  CHECK(lex.gamma == q(1));
  auto lex2 = to_lex(ExtValue::make(3, q(1), QuasiCut::inf_minus()));
  CHECK(lex2.k == 3);
  CHECK(ExtValue::make(2, q(1), QuasiCut::elem(q(1, 2))).is_rational());
  CHECK(ExtValue::make(2, q(1), QuasiCut::inf()).is_inf());
  CHECK(ExtValue::make(2, q(-1, 2), d).to_string() == "2*x - 1/2 @ 1/2+");
}

TEST_CASE("cross-codomain comparison") {
  auto a = ExtValue::make(1, q(0), QuasiCut::plus(q(1)));
  auto b = ExtValue::make(1, q(0), QuasiCut::minus(q(2)));
  CHECK(cross_leq(a, b));
  CHECK_FALSE(cross_leq(b, a));
  auto c = ExtValue::make(1, q(0), QuasiCut::minus(q(1)));
  auto e = ExtValue::make(1, q(0), QuasiCut::plus(q(1)));
  CHECK(cross_leq(c, e));
  CHECK_FALSE(cross_leq(e, c));
  CHECK(cross_leq(a, ExtValue::infinity()));
  CHECK_FALSE(cross_leq(ExtValue::infinity(), a));
}
