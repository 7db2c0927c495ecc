#include "doctest.h"
#include "valtree/apprtype.hpp"
#include "valtree/errors.hpp"
#include "valtree/parse.hpp"

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
PuiseuxElt px(const char* s) { return parse_puiseux(s); }
}  // namespace

TEST_CASE("membership by type") {
  auto a = px("t^(1/3)");
  ApprType r = ApprType::residue_ext(a, 1);
  CHECK(appr_member(r, closed_ball(a, 1)) == Tri::Yes);
  CHECK(appr_member(r, open_ball(a, 1)) == Tri::No);
  CHECK(appr_member(r, open_ball(a, q(1, 2))) == Tri::Yes);
  ApprType v = ApprType::value_ext(a, QuasiCut::plus(1));
  CHECK(appr_member(v, closed_ball(a, 1)) == Tri::Yes);
  CHECK(appr_member(v, open_ball(a, 1)) == Tri::Yes);
  CHECK(appr_member(v, closed_ball(a, q(11, 10))) == Tri::No);
  CHECK(appr_member(ApprType::empty(), closed_ball(a, -100)) == Tri::No);
  ApprType im = appr_from_nest(Nest::canonical());
  CHECK(appr_member(im, closed_ball(px("0"), q(1, 4))) == Tri::Yes);
  CHECK(appr_member(im, closed_ball(px("0"), q(1, 1))) == Tri::No);
}

TEST_CASE("types from balls and nests") {
  auto a = px("1 + t");
  CHECK(appr_from_ball({a, QuasiCut::elem(1)}).kind() == ApprType::Kind::ResidueExt);
  CHECK(appr_from_ball({a, QuasiCut::neg_inf()}).kind() == ApprType::Kind::Empty);
  CHECK(appr_from_ball({a, QuasiCut::inf_minus()}).kind() == ApprType::Kind::ValueExt);
  CHECK(appr_from_nest(Nest::canonical()).kind() == ApprType::Kind::Immediate);
}

TEST_CASE("support and the ball at a radius") {
  auto a = px("t");
  ApprType r = ApprType::residue_ext(a, 1);
  CHECK(support_string(appr_support(r)) == "{q <= 1}");
  CHECK(appr_at(r, 1).center == a);
  CHECK_THROWS_AS(appr_at(r, q(3, 2)), GammaOutsideSupport);
  CHECK(support_string(appr_support(ApprType::value_ext(a, QuasiCut::plus(1)))) == "{q <= 1}");
  ApprType im = appr_from_nest(Nest::canonical());
  CHECK(support_string(appr_support(im)) == "{q < 1}");
  CHECK_THROWS_AS(appr_at(im, 1), GammaOutsideSupport);
  PointedBall b = appr_at(im, q(9, 10));
  CHECK(appr_member(im, b) == Tri::Yes);
}

TEST_CASE("classification with audits") {
  CHECK(appr_classify(ApprType::empty()) == ApprClass::ValueExtending);
  CHECK(appr_classify(ApprType::residue_ext(px("0"), 2)) == ApprClass::ResidueExtending);
  CHECK(appr_classify(ApprType::value_ext(px("0"), parse_radius("real(y^2 - 2, 1, 2)"))) == ApprClass::ValueExtending);
  CHECK(appr_classify(appr_from_nest(Nest::canonical())) == ApprClass::Immediate);
}
