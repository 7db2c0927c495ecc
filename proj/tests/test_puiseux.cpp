#include "doctest.h"
#include "valtree/errors.hpp"
#include "valtree/newton.hpp"
#include "valtree/parse.hpp"

#include <random>

using namespace valtree;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
PuiseuxElt px(const char* s) { return parse_puiseux(s); }
Poly poly(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("valuation of Puiseux elements") {
  CHECK(px_val(px("t^(1/2) + t")) == q(1, 2));
  CHECK_FALSE(px_val(px("0")).has_value());
  CHECK(px_val(px("3*t^(-1) + 1")) == q(-1));
  CHECK_THROWS_AS(px_val(px("O(t^2)")), IndeterminateValuation);
  CHECK(px_val(px("t + O(t^2)")) == q(1));
}

TEST_CASE("evaluation") {
  auto f = poly("x^2 - t");
  CHECK(px_eval(f, px("0")) == px("-t"));
  CHECK(px_val(px_eval(f, px("0"))) == q(1));
  CHECK(px_eval(f, px("t^(1/2)")).is_exact_zero());
  auto a = px("1 + t^(2/3) - 5*t^7");
  CHECK(px_eval(Poly::x_minus(a), a).is_exact_zero());
  auto err = px_eval(f, px("t^(1/2) + O(t^3)"));
  CHECK(err.no_terms());
  CHECK(*err.prec() == q(7, 2));
}

TEST_CASE("literal round trip") {
  for (const char* s : {"t^(1/2) + t", "-3*t^(-1) + 1", "1/2 - t^2 + O(t^(7/2))", "zeta(3,1)*t^(1/3)",
                        "(1 + zeta(4,1))*t", "O(t)", "0", "-t^(2/3)"}) {
    auto a = px(s);
    CHECK(parse_puiseux(a.to_string()) == a);
  }
  for (const char* s : {"x^2 - t", "t*x^3 + x", "(t + 1)*x^2 - 2*x + t^(1/2)", "x"}) {
    auto f = poly(s);
    CHECK(parse_poly(f.to_string()) == f);
  }
  CHECK(poly("x^2 - t").to_string() == "x^2 - t");
}

TEST_CASE("literal errors carry positions") {
  CHECK_THROWS_AS(parse_radius("1/0"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^2 - "), ParseError);
  try {
    parse_poly("x + ?");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("radius grammar round trip") {
  for (const char* s : {"1/2", "1/2-", "-3+", "-inf", "inf-", "inf", "real(y^2 - 2, 1, 2)"}) {
    auto d = parse_radius(s);
    CHECK(parse_radius(d.to_string()) == d);
    CHECK(d.to_string() == s);
  }
}

TEST_CASE("ultrametric and multiplicative laws on random elements") {
  std::mt19937 rng(7);
  auto rand_elt = [&]() {
    PuiseuxElt::Terms t;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      Rational e(static_cast<long>(rng() % 13) - 4, static_cast<long>(1 + rng() % 3));
      e.canonicalize();
      t[e] = t[e] + Cyclo(static_cast<long>(rng() % 7) - 3);
    }
    return PuiseuxElt(t, std::nullopt);
  };
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto a = rand_elt(), b = rand_elt();
    if (a.is_exact_zero() || b.is_exact_zero()) continue;
    auto va = *px_val(a), vb = *px_val(b);
    auto s = px_val(a + b);
    if (s) CHECK(*s >= std::min(va, vb));
    if (va != vb) CHECK(*s == std::min(va, vb));
    CHECK(*px_val(a * b) == va + vb);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("Newton-Puiseux roots and conjugacy groups") {
  auto g1 = puiseux_roots(poly("x^2 - t"), 16);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].e == 2);
  CHECK(g1[0].size() == 2);
  CHECK(g1[0].roots[0].is_exact());

  auto g2 = puiseux_roots(poly("x^2 - t^2"), 16);
  CHECK(g2.size() == 2);
  CHECK(g2[0].e == 1);

  auto g3 = puiseux_roots(poly("x"), 16);
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].roots[0].is_exact_zero());

  auto g4 = puiseux_roots(poly("x^3 - t"), 16);
  REQUIRE(g4.size() == 1);
  CHECK(g4[0].size() == 3);
  CHECK(g4[0].e == 3);

  auto g5 = puiseux_roots(poly("x^4 - t^2"), 16);
  REQUIRE(g5.size() == 2);
  CHECK(g5[0].size() == 2);
  CHECK(g5[1].size() == 2);

  auto g6 = puiseux_roots(poly("x^2 + 1"), 16);
  CHECK(g6.size() == 1);

  CHECK_THROWS_AS(puiseux_roots(poly("x^3 - x - 1"), 16), UnsupportedCoefficientField);
}

TEST_CASE("quadratic residues with cyclotomic square roots") {
  for (const char* s : {"x^2 - 2", "x^2 + 2*x + 2", "x^2 - 3*t^2", "(x - 1 - t)^2 - 5*t^2", "x^2 + 7"}) {
    Poly f = poly(s);
    auto roots = puiseux_root_list(f, 8);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(px_eval(f, r).is_exact_zero());
    CHECK_FALSE(roots[0] == roots[1]);
    CHECK(puiseux_roots(f, 8).size() == 1);
  }
  auto r = puiseux_root_list(poly("(x - t)*(x^2 - 2*t^2)"), 8);
  CHECK(r.size() == 3);
  for (const char* s : {"(x^2 + 4)*(x^2 + 9)", "(x^2 + 2*x + 2)*(x^2 - 2*x + 5)", "(x^2 - 3)*(x^3 - 2)*(x - 1)"}) {
    Poly f = poly(s);
    int found = 0;
    try {
      for (const auto& x : puiseux_root_list(f, 4)) found += px_eval(f, x).is_exact_zero();
    } catch (const UnsupportedCoefficientField&) {
      found = -1;
    }
    CHECK(found == (std::string(s).find("x^3 - 2") == std::string::npos ? f.degree() : -1));
  }
}

TEST_CASE("roots of a non-terminating expansion carry the requested order") {
  // x^2 - x - t: roots are power series, one near 0 and one near 1
  auto f = poly("x^2 - x - t");
  auto roots = puiseux_root_list(f, 10);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(*r.prec() == 10);
    auto res = px_eval(f, r);
    CHECK(res.no_terms());
    CHECK(*res.prec() >= 10);
  }
  // Catalan numbers up to sign appear as coefficients of the small root
  const PuiseuxElt& small = px_val(roots[0]) == q(1) ? roots[0] : roots[1];
  CHECK(small.coeff(q(1)) == Cyclo(-1));
  CHECK(small.coeff(q(2)) == Cyclo(1));
  CHECK(small.coeff(q(3)) == Cyclo(-2));
  CHECK(small.coeff(q(4)) == Cyclo(5));
}

TEST_CASE("residuals of roots over a product corpus") {
  const char* corpus[] = {"(x - t)*(x - t^(1/2))*(x + t^(1/2))", "x^3 - t^2", "(x^2 - t^3)*(x - 1)",
                          "x^2 - 2*t*x + t^2 - t^3", "(x^2 + t)*(x - t^(-1))"};
  for (const char* s : corpus) {
    auto f = poly(s);
    std::size_t total = 0;
    for (const auto& g : puiseux_roots(f, 16)) {
      total += g.size();
      for (const auto& r : g.roots) {
        auto res = px_eval(f, r);
        CHECK(res.no_terms());
        if (res.prec()) CHECK(*res.prec() >= 16);
      }
    }
    CHECK(total == static_cast<std::size_t>(f.degree()));
  }
}
