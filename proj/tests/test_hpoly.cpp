#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace ropelab;
using th::P;

TEST_SUITE("bivar") {

TEST_CASE("multiplication") {
  Field q = make_field(0), f2 = make_field(2);
  HomPoly tu = hp_mul(HomPoly::t(q), HomPoly::u(q));
  CHECK(tu.degree() == 2);
  CHECK(tu.coeffs() == std::vector<Scalar>{Scalar(q, 0), Scalar(q, 1), Scalar(q, 0)});
  CHECK(P(q, "t+u") * P(q, "t-u") == P(q, "t^2-u^2"));
  // (t+u)^2 = t^2 + 2tu + u^2 and 2 = 0 in F_2
  CHECK(hp_pow(P(f2, "t+u"), 2) == P(f2, "t^2+u^2"));
  CHECK((P(q, "t") * HomPoly::zero(q)).is_zero());
}

TEST_CASE("gcd examples") {
  Field q = make_field(0);
  CHECK(hp_gcd({P(q, "u"), P(q, "-t")}) == P(q, "1"));
  CHECK(hp_gcd({P(q, "t*u"), P(q, "t^2")}) == P(q, "t"));
  CHECK(hp_gcd({P(q, "t^2-u^2"), P(q, "t^2+2*t*u+u^2")}) == P(q, "t+u"));
  CHECK(hp_gcd({P(q, "3*u^2"), HomPoly::zero(q)}) == P(q, "u^2"));
  try {
    hp_gcd({HomPoly::zero(q)});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllZero);
  }
}

TEST_CASE("evaluation") {
  Field q = make_field(0), f5 = make_field(5);
  CHECK(hp_eval(P(q, "t+u"), Scalar(q, 1), Scalar(q, 1)) == Scalar(q, 2));
  CHECK(hp_eval(P(q, "t^2"), Scalar(q, 0), Scalar(q, 1)).is_zero());
  CHECK(hp_eval(P(f5, "t^2+t*u"), Scalar(f5, 2), Scalar(f5, 3)).is_zero());
}

TEST_CASE("ring laws and gcd properties on random inputs") {
  std::mt19937_64 rng(17);
  for (long long p : {0LL, 2LL, 3LL, 7LL}) {
    Field f = make_field(p);
    for (int s = 0; s < 150; ++s) {
      HomPoly a = th::rand_poly(f, rng() % 4, rng), b = th::rand_poly(f, rng() % 4, rng),
              c = th::rand_poly(f, rng() % 4, rng);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      if (a.is_zero() && b.is_zero()) continue;
      HomPoly g = hp_gcd({a, b});
      REQUIRE(hp_divides(g, a));
      REQUIRE(hp_divides(g, b));
      if (c.is_zero()) continue;
      HomPoly gh = hp_gcd({a * c, b * c});
      REQUIRE(gh == hp_monic(g * c));
      // quotients by the gcd are coprime
      if (!a.is_zero() && !b.is_zero()) REQUIRE(hp_gcd({hp_divexact(a, g), hp_divexact(b, g)}).degree() == 0);
    }
  }
}

TEST_CASE("text round trip") {
  Field q = make_field(0);
  HomPoly f = P(q, "2*t^3 - 1/2*t*u^2 + u^3");
  CHECK(f.str() == "2*t^3 - 1/2*t*u^2 + u^3");
  CHECK(P(q, f.str()) == f);
  CHECK(P(q, "0").is_zero());
  CHECK_THROWS_AS(P(q, "t^2 + u"), Error);
  CHECK_THROWS_AS(P(q, "x"), Error);
}
}
