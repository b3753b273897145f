#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"
#include "ropelab/io.hpp"
#include "ropelab/suites.hpp"

using namespace ropelab;
using th::P;

TEST_SUITE("io") {

TEST_CASE("polynomials") {
  Field q = make_field(0);
  HomPoly p = P(q, "t^2 - 3/2*t*u + 4*u^2");
  Json j = to_json(p);
  CHECK(j["deg"] == 2);
  CHECK(j["coeffs"][0] == 1);
  CHECK(j["coeffs"][1] == "-3/2");
  CHECK(hompoly_from_json(q, j) == p);
  CHECK(hompoly_from_json(q, Json("t^2 - 3/2*t*u + 4*u^2")) == p);
  CHECK(hompoly_from_json(q, to_json(HomPoly::zero(q))).is_zero());
  Field f7 = make_field(7);
  CHECK(hompoly_from_json(f7, Json{{"deg", 1}, {"coeffs", {3, "10"}}}) == P(f7, "3*t + 3*u"));
  CHECK_THROWS_AS(hompoly_from_json(q, Json{{"deg", 2}, {"coeffs", {1}}}), Error);
}

TEST_CASE("rope round trip") {
  for (long long ch : {0LL, 3LL}) {
    Rope c = random_rope(5, {1, 2}, make_field(ch), 4);
    Rope back = rope_from_json(Json::parse(to_json(c).dump()));
    CHECK(back.alpha == c.alpha);
    CHECK(back.beta == c.beta);
    CHECK(back.B.entries() == c.B.entries());
    CHECK(back.field.characteristic() == c.field.characteristic());
  }
  Json a_only = Json::parse(R"({"n": 3, "A": [["t^2", "u^2"]]})");
  CHECK(rope_from_json(a_only).genus == -2);

  Json bad = {{"n", 3}, {"B", {{"u"}, {"-t"}}}, {"alpha", {2}}};
  try {
    rope_from_json(bad);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  CHECK_THROWS_AS(rope_from_json(Json{{"n", 3}}), Error);
  CHECK_THROWS_AS(rope_from_json(Json{{"n", "x"}, {"B", {{"u"}, {"-t"}}}}), Error);
  CHECK_THROWS_AS(load_rope("/nonexistent/rope.json"), Error);

  const std::string path = "io_roundtrip_rope.json";
  Rope c = rope_from_json(Json{{"n", 3}, {"field", 2}, {"B", {{"u^3"}, {"t^3"}}}});
  save_rope(c, path);
  CHECK(load_rope(path).genus == -3);
  std::remove(path.c_str());
}

TEST_CASE("complex dump") {
  Field q = make_field(0);
  Rope c = rope_from_json(Json{{"n", 3}, {"B", {{"u"}, {"-t"}}}});
  ComplexRep g = rope_resolution(c);
  Json j = to_json(g);
  CHECK(j["maps"].size() == g.maps.size());
  CHECK(j["modules"][1].size() == 4);
  CHECK(j["variables"] == Json({"x0", "x1", "t", "u"}));
  CHECK(j["maps"][0]["from"] == 1);
  CHECK(j["maps"][0]["entries"].size() == 1);

  NormalSections s = h0_normal(c);
  Json ns = to_json(s);
  CHECK(ns["h0"] == 8);
  CHECK(ns["basis"].size() == s.basis.size());
}

TEST_CASE("suite plumbing") {
  CHECK(cell_seed(1, {2, 3}) == cell_seed(1, {2, 3}));
  CHECK(cell_seed(1, {2, 3}) != cell_seed(1, {3, 2}));
  CHECK(cell_seed(1, {2}) != cell_seed(2, {2}));
  CHECK(is_suite("all"));
  CHECK(is_suite("staircase"));
  CHECK_FALSE(is_suite("6.13"));
  CHECK_THROWS_AS(run_suite("nope", {}), Error);
  SuiteOptions o;
  o.samples = 1;
  o.n_max = 3;
  o.g_min = -2;
  auto r = run_suite("double-lines", o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].pass);
  CHECK(r[0].cases == 6);
}
}
