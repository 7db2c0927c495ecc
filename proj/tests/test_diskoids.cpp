#include "doctest.h"
#include "valtree/diskoids.hpp"
#include "valtree/errors.hpp"
#include "valtree/parse.hpp"

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
PuiseuxElt px(const char* s) { return parse_puiseux(s); }
Poly poly(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("diskoid membership") {
  Diskoid d = diskoid_of_poly(poly("x^2 - t"), QuasiCut::elem(1));
  CHECK(disk_member(d, px("0")));
  CHECK_FALSE(disk_member(d, px("1")));
  CHECK(disk_member(d, px("t^(1/2)")));
  CHECK(disk_member(d, px("t^(1/2) + t^5")));
  Diskoid open = diskoid_of_poly(poly("x^2 - t"), QuasiCut::plus(1));
  CHECK_FALSE(disk_member(open, px("0")));
  CHECK(disk_member(open, px("t^(1/2) + t^5")));
}

TEST_CASE("orbit of a ball as a diskoid") {
  Diskoid d = orbit_to_diskoid(PointedBall{px("t^(1/2)"), QuasiCut::elem(1)}, poly("x^2 - t"));
  CHECK(d.radius == QuasiCut::elem(q(3, 2)));
  CHECK(d.e == 2);
  Diskoid s = orbit_to_diskoid(PointedBall{px("t"), QuasiCut::elem(2)}, poly("x^2 - t^2"));
  CHECK(s.radius == QuasiCut::elem(2));
  CHECK(s.roots.size() == 1);
  Diskoid all = orbit_to_diskoid(PointedBall{px("t^(1/2)"), QuasiCut::neg_inf()}, poly("x^2 - t"));
  CHECK(all.radius == QuasiCut::neg_inf());
  CHECK(disk_member(all, px("t^(-7)")));
  CHECK_THROWS_AS(orbit_to_diskoid(PointedBall{px("t"), QuasiCut::elem(1)}, poly("x^2 - t")), CenterNotRoot);
  // below the branching distance the conjugate balls merge
  Diskoid low = orbit_to_diskoid(PointedBall{px("t^(1/2)"), QuasiCut::elem(q(1, 4))}, poly("x^2 - t"));
  CHECK(low.radius == QuasiCut::elem(q(1, 2)));
  auto sk = skeleton(low);
  CHECK(sk[0].radius == QuasiCut::elem(q(1, 4)));
}

TEST_CASE("diskoid order") {
  Diskoid a = diskoid_of_poly(poly("x^2 - t"), QuasiCut::elem(1));
  Diskoid b = diskoid_of_poly(poly("x^2 - t"), QuasiCut::elem(q(3, 2)));
  CHECK(disk_leq(a, b));
  CHECK_FALSE(disk_leq(b, a));
  CHECK(disk_leq(a, a));
  Diskoid c = diskoid_of_poly(poly("x - t"), QuasiCut::elem(3));
  CHECK_FALSE(disk_leq(b, c));
  Diskoid ball0 = diskoid_of_poly(poly("x"), QuasiCut::elem(q(1, 3)));
  CHECK(disk_leq(ball0, b));
}

TEST_CASE("support valuations") {
  auto groups = puiseux_roots(poly("x^2 - t"), 16);
  CHECK(support_val(groups[0], poly("t")) == q(1));
  CHECK(support_val(groups[0], poly("x^2")) == q(1));
  CHECK_FALSE(support_val(groups[0], poly("x^2 - t")).has_value());
  CHECK(support_val(groups[0], poly("x - t")) == q(1, 2));
}
