#include "doctest.h"
#include "valtree/balls.hpp"
#include "valtree/errors.hpp"
#include "valtree/parse.hpp"

#include <random>

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
PuiseuxElt px(const char* s) { return parse_puiseux(s); }
PointedBall ball(const char* c, const char* r) { return {px(c), parse_radius(r)}; }
}  // namespace

TEST_CASE("ball membership by radius class") {
  CHECK(contains(ball("0", "1+"), px("t^2")));
  CHECK_FALSE(contains(ball("0", "1+"), px("t")));
  CHECK(contains(ball("0", "1-"), px("t")));
  CHECK(contains(ball("0", "1"), px("t")));
  CHECK(contains(ball("t", "inf-"), px("t")));
  CHECK_FALSE(contains(ball("t", "inf-"), px("t + t^100")));
  CHECK(contains(ball("t", "-inf"), px("t^(-100)")));
  CHECK(contains(ball("0", "real(y^2 - 2, 1, 2)"), px("t^(3/2)")));
  CHECK_FALSE(contains(ball("0", "real(y^2 - 2, 1, 2)"), px("t^(7/5)")));
  CHECK(contains(ball("0", "1"), px("t + O(t^2)")));
  CHECK_THROWS_AS(contains(ball("0", "3"), px("t^2 + O(t^2)")), IndeterminateValuation);
}

TEST_CASE("ball equality and the pointed order") {
  CHECK(ball_eq(ball("0", "1+"), ball("t^2", "1+")));
  CHECK_FALSE(ball_eq(ball("0", "1+"), ball("t", "1+")));
  CHECK(ball_eq(ball("t", "1/3"), ball("t", "1/3")));
  CHECK(pointed_leq(ball("0", "1/2"), ball("t", "1")));
  CHECK(pointed_leq(ball("t", "2-"), ball("t", "2")));
  CHECK_FALSE(pointed_leq(ball("t", "2"), ball("t", "2-")));
  CHECK(ball_superset(ball("t", "2"), ball("t", "2-")));
  CHECK_FALSE(pointed_leq(ball("0", "1+"), ball("t^(1/2)", "1/2")));
}

TEST_CASE("canonical nest") {
  Nest n = Nest::canonical();
  CHECK(n.center(0) == px("t^(1/2)"));
  CHECK(n.radius(0) == q(2, 3));
  CHECK(nest_check(n, 12));
  Nest shifted({1, 0, PuiseuxElt(), 1});
  CHECK(nest_equiv(n, shifted, 12));
  Nest perturbed({1, 0, px("t"), 0});
  CHECK(nest_equiv(n, perturbed, 12));
  Nest other({2, 0, PuiseuxElt(), 0});
  CHECK_FALSE(nest_equiv(n, other, 12));
  CHECK(n.support_cut() == QuasiCut::minus(1));
}

TEST_CASE("balls below a nest") {
  Nest n = Nest::canonical();
  CHECK(ball_below_nest(ball("0", "1/4"), n, 12) == Tri::Yes);
  CHECK(ball_below_nest(ball("1", "5"), n, 12) == Tri::No);
  CHECK(ball_below_nest(n.ball(1), n, 12) == Tri::Yes);
  CHECK(ball_below_nest(ball("t^(1/2)", "1"), n, 12) == Tri::No);
  CHECK(ball_below_nest(ball("t^(1/2)", "2/3+"), n, 12) == Tri::No);
  CHECK(ball_below_nest(ball("t^(1/2)", "2/3-"), n, 12) == Tri::Yes);
}

TEST_CASE("escape is finite for random elements") {
  Nest n = Nest::canonical();
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    PuiseuxElt::Terms terms;
    int len = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < len; ++j) {
      int d = 2 + static_cast<int>(rng() % 5);
      Rational e(static_cast<long>(rng() % (2 * d)), d);
      e.canonicalize();
      terms[e] = Cyclo(1);
    }
    // an honest prefix of the nest limit half the time
    if (k % 2 == 0)
      for (int m = 2; m <= 2 + static_cast<int>(rng() % 6); ++m) terms[1 - Rational(1, m)] = Cyclo(1);
    PuiseuxElt c(terms, std::nullopt);
    int i = n.escape(c);
    CHECK_FALSE(contains(n.ball(i), c));
    for (int j = 0; j < i; ++j) CHECK(contains(n.ball(j), c));
  }
}

TEST_CASE("center exchange and pointed order laws on random balls") {
  std::mt19937 rng(5);
  const char* radii[] = {"0", "1/2", "1/2-", "1/2+", "1", "1-", "real(y^2 - 2, 1, 2)", "-inf", "inf-", "3/2+"};
  auto rand_center = [&]() {
    PuiseuxElt::Terms terms;
    for (int j = 0; j < 3; ++j) {
      Rational e(static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 2));
      e.canonicalize();
      terms[e] = Cyclo(static_cast<long>(rng() % 3) - 1);
    }
    return PuiseuxElt(terms, std::nullopt);
  };
  std::vector<PointedBall> bs;
  for (int k = 0; k < 40; ++k) bs.push_back({rand_center(), parse_radius(radii[rng() % 10])});
  for (const auto& b : bs) {
    CHECK(pointed_leq(b, b));
    for (const auto& c : bs) {
      if (contains(b, c.center)) CHECK(ball_eq(b, PointedBall{c.center, b.radius}));
      if (pointed_leq(b, c) && pointed_leq(c, b)) CHECK(ball_eq(b, c));
      for (const auto& d : bs)
        if (pointed_leq(b, c) && pointed_leq(c, d)) CHECK(pointed_leq(b, d));
    }
  }
}
