#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ropelab/complex.hpp"

using namespace ropelab;
using th::P;

namespace {

Rope dl(const Field& q, const std::string& a, const std::string& b) {
  return rope_from_B(3, make_B(q, {{P(q, a)}, {P(q, b)}}));
}

MultiPoly mp(const Field& f, int nv, std::initializer_list<std::pair<long long, std::vector<int>>> terms) {
  MultiPoly p(f, nv);
  for (const auto& [c, ex] : terms) {
    Mono m;
    for (std::size_t i = 0; i < ex.size(); ++i) m.e[i] = static_cast<std::uint8_t>(ex[i]);
    p.add_term(m, Scalar(f, c));
  }
  return p;
}

long long alt_rank_sum_above_zero(const ComplexRep& c) {
  long long s = 0;
  for (std::size_t i = 1; i < c.modules.size(); ++i)
    s += (i % 2 ? 1 : -1) * static_cast<long long>(c.modules[i].size());
  return s;
}

bool is_tensor_label(const std::string& s) { return s.find("(x)") != std::string::npos; }

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("Koszul basis ordering") {
  KoszulBasis kb(5);
  for (int i = 0; i <= 5; ++i) {
    CHECK(static_cast<long long>(kb.wedge(i).size()) == binom(5, i));
    for (std::size_t t = 0; t < kb.wedge(i).size(); ++t) CHECK(kb.index(kb.wedge(i)[t]) == t);
  }
}

TEST_CASE("Koszul differentials square to zero") {
  for (long long p : {0LL, 2LL, 3LL})
    for (int n = 3; n <= 6; ++n) {
      Field f = make_field(p);
      ComplexRep c;
      c.field = f;
      c.nvars = n + 1;
      KoszulBasis kb(n - 1);
      for (int i = 0; i <= n - 1; ++i) c.modules.push_back(std::vector<int>(kb.wedge(i).size(), i));
      for (int i = 1; i <= n - 1; ++i) c.maps.push_back(koszul_map(f, n, i));
      CHECK(verify_grading(c));
      CHECK(verify_complex(c));
      // Koszul complex resolves K[t,u] = R/(x_0..x_r)
      auto hf = [](int d) -> long long { return d >= 0 ? d + 1 : 0; };
      CHECK(verify_exactness_certificate(c, hf, -2, 6));
    }
  Field q = make_field(0);
  PolyMatrix d1 = koszul_map(q, 4, 1);
  for (int i = 0; i < 3; ++i) CHECK(d1.e[0][i] == MultiPoly::var(q, 5, i));
}

TEST_CASE("split block is a signed permutation") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 2; i <= n - 1; ++i) {
      auto blk = split_block(n, i);
      REQUIRE(static_cast<long long>(blk.size()) == binom(n - 1, i));
      for (std::size_t r = 0; r < blk.size(); ++r) {
        int nz = 0;
        for (std::size_t c = 0; c < blk.size(); ++c) {
          if (blk[r][c] != 0) ++nz;
          CHECK(std::abs(blk[r][c]) <= 1);
        }
        CHECK(nz == 1);
        // diagonal with entry (-1)^(i+1)
        CHECK(blk[r][r] == (i % 2 ? 1 : -1));
      }
    }
}

TEST_CASE("non-minimal resolution of the square of the line") {
  Field q = make_field(0);
  ComplexRep c3 = i2_resolution(3, q);
  REQUIRE(c3.modules.size() == 3);
  CHECK(c3.modules[1].size() == 4);
  CHECK(c3.modules[2].size() == 3);
  CHECK(verify_complex(c3));
  // image of the first map is spanned by the three quadrics
  std::vector<std::string> img;
  for (const auto& p : c3.maps[0].e[0]) img.push_back(p.str());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  CHECK(img == std::vector<std::string>{"x0*x1", "x0^2", "x1^2"});

  ComplexRep c4 = i2_resolution(4, q);
  CHECK(alt_rank_sum_above_zero(c4) == 1);

  for (long long p : {0LL, 2LL, 3LL})
    for (int n = 3; n <= 6; ++n) {
      ComplexRep c = i2_resolution(n, make_field(p));
      CHECK(verify_grading(c));
      CHECK(verify_complex(c));
      CHECK(verify_exactness_certificate(c, [n](int d) { return hf_square_of_line(n, d); }, -2, 6));
      CHECK_FALSE(is_minimal(c));
    }
}

TEST_CASE("cone sign on the shifted Koszul block is forced") {
  // flipping the lower-right block of the third differential breaks d o d = 0
  Field q = make_field(0);
  ComplexRep c = i2_resolution(4, q);
  PolyMatrix& m3 = c.maps[2];
  for (std::size_t r = 0; r < m3.tgt.size(); ++r)
    for (std::size_t s = 0; s < m3.src.size(); ++s)
      if (!is_tensor_label(c.labels[2][r]) && !is_tensor_label(c.labels[3][s])) m3.e[r][s] = -m3.e[r][s];
  CHECK_FALSE(verify_complex(c));
}

TEST_CASE("minimal resolution of the square of the line") {
  Field q = make_field(0);
  ComplexRep c3 = minimal_i2_resolution(3, q);
  CHECK(c3.modules[1].size() == 3);
  CHECK(c3.modules[2].size() == 2);
  for (long long p : {0LL, 2LL, 5LL})
    for (int n = 3; n <= 6; ++n) {
      Field f = make_field(p);
      ComplexRep c = minimal_i2_resolution(n, f);
      for (int i = 1; i <= n - 1; ++i)
        CHECK(static_cast<long long>(c.modules[i].size()) == (n - 1) * binom(n - 1, i) - binom(n - 1, i + 1));
      CHECK(verify_grading(c));
      CHECK(verify_complex(c));
      CHECK(is_minimal(c));
      CHECK(verify_exactness_certificate(c, [n](int d) { return hf_square_of_line(n, d); }, -2, 7));
    }
}

TEST_CASE("rope resolution of double lines") {
  Field q = make_field(0);
  Rope c1 = dl(q, "u", "-t");
  ComplexRep g = rope_resolution(c1);
  REQUIRE(g.maps.size() == 3);
  CHECK(g.maps[0].e.size() == 1);
  CHECK(g.maps[0].src.size() == 4);
  CHECK(g.maps[1].e.size() == 4);
  CHECK(g.maps[1].src.size() == 4);
  CHECK(g.maps[2].e.size() == 4);
  CHECK(g.maps[2].src.size() == 1);
  CHECK(verify_complex(g));
  CHECK(is_minimal(g));
  CHECK(verify_exactness_certificate(g, [&](int d) { return hilbert_function(c1, d); }, -2, 8));

  Rope c2 = dl(q, "u^2", "-t^2");
  ComplexRep g2 = rope_resolution(c2);
  // x0 u^2 - x1 t^2 appears, up to sign, as the last generator
  MultiPoly target = mp(q, 4, {{1, {1, 0, 0, 2}}, {-1, {0, 1, 2, 0}}});
  CHECK(g2.maps[0].e[0].back() == -target);
  CHECK(verify_complex(g2));
}

TEST_CASE("rope resolution on random ropes") {
  const std::vector<std::pair<int, std::vector<int>>> types = {
      {3, {1}}, {3, {2}}, {4, {1, 1}}, {4, {1, 3}}, {4, {3}}, {5, {1, 1, 1}}, {5, {2, 2}}, {5, {4}}, {6, {1, 1, 2, 2}},
      {6, {2, 3}}};
  for (long long p : {0LL, 2LL, 3LL}) {
    Field f = make_field(p);
    for (const auto& [n, al] : types)
      for (std::uint64_t s = 0; s < 2; ++s) {
        Rope c = random_rope(n, al, f, 31 * s + n);
        if (!c.nondegenerate()) {
          CHECK_THROWS_AS(rope_resolution(c), Error);
          ComplexRep d = rope_resolution(c, true);
          CHECK(verify_complex(d));
          CHECK_FALSE(is_minimal(d));
          continue;
        }
        ComplexRep g = rope_resolution(c);
        CHECK(verify_grading(g));
        CHECK(verify_complex(g));
        CHECK(is_minimal(g));
        CHECK(verify_exactness_certificate(g, [&](int d) { return hilbert_function(c, d); }, -2, c.beta.back() + 4));
        CHECK(static_cast<long long>(g.modules[1].size()) == binom(n, 2) + c.k);

        // generators of G_1 have the degrees of ideal_generators
        std::multiset<int> a(g.modules[1].begin(), g.modules[1].end()), b;
        for (const auto& p : ideal_generators(c)) b.insert(p.degree());
        CHECK(a == b);
        // and the Betti table
        BettiTable bt = betti_table(c);
        for (int i = 1; i <= n; ++i) {
          std::map<int, int> tw;
          for (int d : g.modules[i]) ++tw[d];
          CHECK(tw == bt.gens[i - 1]);
        }
      }
  }
}

TEST_CASE("degenerate rope needs the explicit flag") {
  Field q = make_field(0);
  Rope c = rope_from_B(4, make_B(q, {{P(q, "1")}, {P(q, "0")}, {P(q, "0")}}));
  CHECK_FALSE(c.nondegenerate());
  try {
    rope_resolution(c);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateRope);
  }
  ComplexRep g = rope_resolution(c, true);
  CHECK(verify_complex(g));
  CHECK_FALSE(is_minimal(g));
  CHECK(verify_exactness_certificate(g, [&](int d) { return hilbert_function(c, d); }, -2, 6));
}

TEST_CASE("structure sheaf resolution") {
  Field q = make_field(0);
  Rope c1 = dl(q, "u", "-t");
  ComplexRep e = struct_sheaf_resolution(c1);
  REQUIRE(e.modules.size() == 3);
  CHECK(e.modules[0] == std::vector<int>{0, 0});
  CHECK(e.modules[1] == std::vector<int>{1, 1, 1, 1});
  CHECK(verify_complex(e));
  CHECK(verify_exactness_certificate(e, [&](int d) { return h0_structure(c1, d); }, -3, 5));

  const std::vector<std::pair<int, std::vector<int>>> types = {
      {3, {1}}, {3, {3}}, {4, {1, 2}}, {4, {2}}, {5, {1, 1, 1}}, {5, {2, 3}}, {6, {1, 2}}};
  for (long long p : {0LL, 2LL, 3LL})
    for (const auto& [n, al] : types) {
      Rope c = random_rope(n, al, make_field(p), 17 + n);
      ComplexRep s = struct_sheaf_resolution(c);
      CHECK(verify_grading(s));
      CHECK(verify_complex(s));
      CHECK(verify_exactness_certificate(s, [&](int d) { return h0_structure(c, d); }, -3 - c.alpha.back(), 6));
      // generator degrees of F_0 are 0 and 1 - alpha_i
      std::vector<int> g0{0};
      for (int a : c.alpha) g0.push_back(1 - a);
      CHECK(s.modules[0] == g0);
    }
}

TEST_CASE("mutations are caught") {
  Field q = make_field(0);
  Rope c = random_rope(4, {1, 2}, q, 5);
  ComplexRep g = rope_resolution(c);
  auto hf = [&](int d) { return hilbert_function(c, d); };
  REQUIRE(verify_complex(g));

  ComplexRep bad = g;
  for (std::size_t j = 0; j < bad.maps[1].e[0].size(); ++j)
    if (!bad.maps[1].e[0][j].is_zero()) {
      bad.maps[1].e[0][j] += bad.maps[1].e[0][j];
      break;
    }
  CHECK_FALSE(verify_complex(bad));

  // killing a column of the last map keeps d o d = 0 but breaks exactness
  ComplexRep cut = g;
  for (auto& row : cut.maps.back().e) row[0] = MultiPoly(q, g.nvars);
  CHECK(verify_complex(cut));
  ExactnessReport rep = exactness_certificate(cut, hf, -2, 8);
  CHECK(rep.euler_ok);
  CHECK_FALSE(rep.rank_ok);

  // dropping a generator breaks the Euler characteristic
  ComplexRep drop = g;
  drop.modules.back().pop_back();
  CHECK_FALSE(exactness_certificate(drop, hf, -2, 8).euler_ok);

  ComplexRep empty;
  CHECK(verify_complex(empty));
}

TEST_CASE("desk bound") {
  Field q = make_field(0);
  try {
    minimal_i2_resolution(7, q);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeLimit);
  }
  set_desk_bound(7);
  ComplexRep c = minimal_i2_resolution(7, q);
  CHECK(verify_complex(c));
  set_desk_bound(0);
  CHECK(desk_bound() == 6);
}
}
