#include "doctest.h"
#include "helpers.hpp"
#include "ropelab/normal.hpp"

using namespace ropelab;
using th::P;

namespace {

Rope dl(const Field& f, const std::string& a, const std::string& b) {
  return rope_from_B(3, make_B(f, {{P(f, a)}, {P(f, b)}}));
}

// sum over l and unordered pairs {h, v} of max(0, a_l - a_h - a_v + 2)
int correction_oracle(const std::vector<int>& a) {
  int s = 0;
  const int n = static_cast<int>(a.size());
  for (int l = 0; l < n; ++l)
    for (int h = 0; h < n; ++h)
      for (int v = 0; v < n; ++v) {
        if (v < h) continue;
        int x = a[l] - a[h] - a[v] + 2;
        if (x > 0) s += x;
      }
  return s;
}

std::size_t span_dim(const Field& f, std::size_t n, const std::vector<Vec>& vs) {
  RowSpace rs(f, n);
  for (const auto& v : vs) rs.insert(v);
  return rs.rank();
}

}  // namespace

TEST_SUITE("normal") {

TEST_CASE("system layout") {
  Field q = make_field(0);
  NormalSystem ns = assemble_system(dl(q, "u", "-t"));
  CHECK(ns.nunknowns() == 9 + 3 + 9);
  CHECK(ns.free_params == 3);
  CHECK(ns.blocks[ns.pij(1, 0)].label() == "P^01");
  CHECK(ns.blocks[ns.ps(0)].label() == "P^1");
  CHECK(ns.blocks[ns.qijl(0, 1, 1)].label() == "Q^11_0");

  Rope c3 = random_rope(4, {1, 1}, q, 2);
  CHECK(assemble_system(c3).free_params == 8);
}

TEST_CASE("double lines match the closed formula") {
  Field q = make_field(0), f2 = make_field(2);
  for (long long p : {0LL, 2LL, 3LL}) CHECK(h0_normal(dl(make_field(p), "u", "-t")).h0 == 8);
  CHECK(h0_normal(dl(q, "u^3", "-t^3")).h0 == 11);
  CHECK(h0_normal(dl(f2, "u^3", "t^3")).h0 == 12);
  CHECK(double_line_formula(3, -1, 0) == 8);
  CHECK(double_line_formula(4, -2, 2) == 14);
  CHECK(double_line_formula(4, -2, 0) == 14);

  for (long long p : {0LL, 2LL, 3LL, 5LL})
    for (int n = 3; n <= 5; ++n)
      for (int g = -1; g >= -4; --g)
        for (std::uint64_t s = 0; s < 2; ++s) {
          Rope c = random_rope(n, {-g}, make_field(p), 13 * s + n - g);
          NormalSections sec = h0_normal(c);
          CHECK(sec.h0 == double_line_formula(n, g, p));
          CHECK(check_pij(c, sec));
          if (p != 2) CHECK(sec.p_in_image);
        }
}

TEST_CASE("P block") {
  Field q = make_field(0);
  Rope g1 = dl(q, "u", "-t");
  NormalSections s1 = h0_normal(g1);
  CHECK(check_pij(g1, s1));
  // some basis direction carries the quadric line
  int with_p = 0;
  for (const auto& b : s1.basis)
    if (!b.P[0][0].is_zero() || !b.P[0][1].is_zero() || !b.P[1][1].is_zero()) ++with_p;
  CHECK(with_p >= 1);

  Rope g2 = dl(q, "u^2", "-t^2");
  NormalSections s2 = h0_normal(g2);
  CHECK(check_pij(g2, s2));
  for (const auto& b : s2.basis)
    for (const auto& row : b.P)
      for (const auto& x : row) CHECK(x.is_zero());

  Rope c3 = random_rope(5, {1, 2}, q, 4);
  CHECK(check_pij(c3, h0_normal(c3)));

  // a corrupted P block is rejected
  NormalSections bad = s2;
  REQUIRE(!bad.basis.empty());
  bad.basis[0].P[0][0] = P(q, "t^2");
  CHECK_FALSE(check_pij(g2, bad));
}

TEST_CASE("condition on P") {
  Field q = make_field(0);
  Rope c = dl(q, "u^2", "-t^2");
  NormalSections s = h0_normal(c);
  CHECK(check_p_in_image(c, s));
  NormalSections zero;
  CHECK(check_p_in_image(c, zero));
  // alpha = (3,3) in P^4: lambda -> B^t lambda has rank 8 into a space of
  // dimension 10, so some monomial vector is not of the form B^t lambda
  Rope c33 = random_rope(5, {3, 3}, q, 2);
  REQUIRE(c33.beta == std::vector<int>{3, 3});
  NormalSections s33 = h0_normal(c33);
  CHECK(s33.p_in_image);
  int rejected = 0;
  for (int col = 0; col < 2; ++col)
    for (int e = 0; e <= 4; ++e) {
      NormalSections fake;
      NormalSolution sol;
      sol.Ps = {P(q, "0"), P(q, "0")};
      sol.Ps[col] = HomPoly::monomial(Scalar::one(q), 4 - e, e);
      fake.basis.push_back(sol);
      if (!check_p_in_image(c33, fake)) ++rejected;
    }
  CHECK(rejected >= 2);
}

TEST_CASE("lower bound formula") {
  Field q = make_field(0);
  Rope a = random_rope(5, {2, 2}, q, 1);
  CHECK(normal_lower_bound(a) == 28);
  Rope b = random_rope(5, {3, 3}, q, 1);
  CHECK(normal_lower_bound(b) == 36);
  Rope c = random_rope(5, {2, 4}, q, 1);
  CHECK(normal_lower_bound(c) == 38);
  CHECK(expected_h0_if_p_in_image(c) == 38);
  for (const Rope* x : {&a, &b, &c})
    CHECK(normal_lower_bound(*x) ==
          (x->r + 1) * (2 + x->k - x->genus) - x->k * x->k + correction_oracle(x->alpha));

  try {
    normal_lower_bound(random_rope(5, {1, 2}, q, 1));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
  CHECK_THROWS_AS(normal_lower_bound(dl(q, "u^2", "-t^2")), Error);
  // a large gap zeroes the correction
  Rope gap = random_rope(6, {2, 2, 2}, q, 3);
  CHECK(normal_lower_bound(gap) == (gap.r + 1) * (2 + gap.k - gap.genus) - gap.k * gap.k);
}

TEST_CASE("h0 against the lower bound") {
  const std::vector<std::pair<int, std::vector<int>>> types = {
      {5, {2, 2}}, {5, {2, 3}}, {5, {3, 3}}, {6, {2, 2, 2}}, {6, {2, 3}}, {6, {2, 2, 3}}, {6, {3, 4}}};
  for (long long p : {0LL, 2LL, 3LL})
    for (const auto& [n, al] : types) {
      Rope c = random_rope(n, al, make_field(p), 77 + n);
      NormalSections s = h0_normal(c);
      CHECK(s.h0 >= normal_lower_bound(c));
      if (s.p_in_image) CHECK(s.h0 == expected_h0_if_p_in_image(c));
      CHECK(check_pij(c, s));
    }
}

TEST_CASE("double line oracle") {
  Field q = make_field(0);
  Rope c = dl(q, "u^2", "-t^2");
  NormalSystem ns = assemble_system(c);
  DoubleLineParams zero{{P(q, "0"), P(q, "0")}, {}, {}, {}};
  NormalSolution z = double_line_solution_oracle(c, zero);
  for (const auto& x : to_vector(ns, z)) CHECK(x.is_zero());

  DoubleLineParams e0{{P(q, "t"), P(q, "0")}, {}, {}, {}};
  NormalSolution s0 = double_line_solution_oracle(c, e0);
  CHECK(s0.Ps[0] == hp_scale(P(q, "t") * c.B.entry(0, 0), Scalar(q, mpq_class(-1, 2))));
  CHECK(s0.Q[0][0][1] == hp_scale(P(q, "t") * c.A.entry(0, 1), Scalar(q, mpq_class(1, 2))));
  CHECK(satisfies(ns, to_vector(ns, s0)));

  DoubleLineParams wrong;
  wrong.P = {P(q, "t^3")};
  CHECK_THROWS_AS(double_line_solution_oracle(c, wrong), Error);
}

TEST_CASE("oracle spans the solution space") {
  for (long long p : {0LL, 3LL, 2LL})
    for (int g = -1; g >= -4; --g) {
      Field f = make_field(p);
      std::vector<Rope> ropes = {random_rope(3, {-g}, f, 5 - g)};
      // a degenerate double line in block form: (B' 0; 0 1)
      {
        Rope base = ropes[0];
        std::vector<std::vector<HomPoly>> b = {{base.B.entry(0, 0), P(f, "0")},
                                               {base.B.entry(1, 0), P(f, "0")},
                                               {P(f, "0"), P(f, "1")}};
        ropes.push_back(rope_from_B(4, make_B(f, b)));
      }
      for (const Rope& c : ropes) {
        NormalSystem ns = assemble_system(c);
        Kernel ker = kernel(ns.sys);
        const int m = c.r + 1;
        std::vector<Vec> got;
        std::vector<DoubleLineParams> params;
        const std::vector<HomPoly> lin = {P(f, "t"), P(f, "u")};
        if (p != 2) {
          for (int i = 0; i < m; ++i)
            for (const auto& x : lin) {
              DoubleLineParams d;
              d.lambda.assign(m, P(f, "0"));
              d.lambda[i] = x;
              params.push_back(d);
            }
        } else {
          for (int s = 0; s < c.k; ++s)
            for (int e = 0; e <= c.beta[s] + 1; ++e) {
              DoubleLineParams d;
              d.P.assign(c.k, P(f, "0"));
              d.P[s] = HomPoly::monomial(Scalar::one(f), c.beta[s] + 1 - e, e);
              params.push_back(d);
            }
          if (g == -1) {
            DoubleLineParams d;
            d.P.assign(c.k, P(f, "0"));
            d.c_prime = Scalar::one(f);
            params.push_back(d);
          }
        }
        if (g == -1) {
          DoubleLineParams d = params.front();
          for (auto& x : d.lambda) x = P(f, "0");
          for (auto& x : d.P) x = P(f, "0");
          d.c_prime.reset();
          d.c_line = Scalar::one(f);
          params.push_back(d);
        }
        for (const auto& d : params) {
          Vec v = to_vector(ns, double_line_solution_oracle(c, d));
          CHECK(satisfies(ns, v));
          got.push_back(v);
        }
        CHECK(span_dim(f, ns.nunknowns(), got) == ker.nullity());
        CHECK(static_cast<long long>(ker.nullity()) + ns.free_params == double_line_formula(c.n, c.genus, p));
      }
    }
}

TEST_CASE("invariance under row operations on A and column scaling of B") {
  Field q = make_field(0);
  Rope c = random_rope(5, {2, 2}, q, 9);
  NormalSections s = h0_normal(c);
  // U = ((1, 2), (3, 7)) has determinant 1
  std::vector<std::vector<HomPoly>> ua(2);
  for (int j = 0; j <= c.r; ++j) {
    ua[0].push_back(c.A.entry(0, j) + hp_scale(c.A.entry(1, j), Scalar(q, 2)));
    ua[1].push_back(hp_scale(c.A.entry(0, j), Scalar(q, 3)) + hp_scale(c.A.entry(1, j), Scalar(q, 7)));
  }
  Rope cu = rope_from_A(5, make_A(q, ua));
  NormalSections su = h0_normal(cu);
  CHECK(su.h0 == s.h0);
  CHECK(su.p_in_image == s.p_in_image);

  std::vector<std::vector<HomPoly>> bs = c.B.entries();
  for (auto& row : bs) {
    row[0] = hp_scale(row[0], Scalar(q, -3));
    row[1] = hp_scale(row[1], Scalar(q, mpq_class(5, 2)));
  }
  Rope cb = rope_from_B(5, make_B(q, bs));
  NormalSections sb = h0_normal(cb);
  CHECK(sb.h0 == s.h0);
  CHECK(sb.p_in_image == s.p_in_image);
}
}
