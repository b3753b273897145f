#include "ropelab/normal.hpp"

#include <map>

namespace ropelab {

namespace {

struct Term {
  std::size_t block;
  HomPoly mult;
};

// Expands sum_b mult_b * X_b = 0 into one scalar row per monomial.
void add_equation(NormalSystem& ns, const std::vector<Term>& terms) {
  int D = -1;
  for (const auto& t : terms)
    if (!t.mult.is_zero()) {
      int d = ns.blocks[t.block].degree + t.mult.degree();
      if (D >= 0 && d != D) fail(Errc::InternalError, "inhomogeneous normal-sheaf equation");
      D = d;
    }
  if (D < 0) return;
  std::vector<std::map<std::size_t, Scalar>> rows(D + 1);
  for (const auto& t : terms) {
    if (t.mult.is_zero()) continue;
    const UnknownBlock& b = ns.blocks[t.block];
    for (int a = 0; a <= t.mult.degree(); ++a) {
      const Scalar& m = t.mult.coeffs()[a];
      if (m.is_zero()) continue;
      for (int c = 0; c <= b.degree; ++c) {
        auto [it, fresh] = rows[a + c].try_emplace(b.offset + c, m);
        if (!fresh) it->second += m;
      }
    }
  }
  for (auto& r : rows) {
    SparseRow row;
    for (auto& [col, v] : r)
      if (!v.is_zero()) row.push_back({col, v});
    if (!row.empty()) ns.sys.add_row(std::move(row));
  }
}

HomPoly block_poly(const NormalSystem& ns, std::size_t bi, const Vec& v) {
  const UnknownBlock& b = ns.blocks[bi];
  std::vector<Scalar> c(v.begin() + b.offset, v.begin() + b.offset + b.degree + 1);
  return HomPoly(ns.rope.field, b.degree, c);
}

void put_poly(const NormalSystem& ns, std::size_t bi, const HomPoly& p, Vec& v) {
  const UnknownBlock& b = ns.blocks[bi];
  if (p.is_zero()) return;
  require(p.degree() == b.degree, Errc::ShapeError, "solution entry " + b.label() + " has the wrong degree");
  for (int c = 0; c <= b.degree; ++c) v[b.offset + c] = p.coeffs()[c];
}

// Coefficient vector of p in [S]_d, zero-padded.
Vec coeff_vec(const HomPoly& p, int d, const Field& f) {
  Vec v(d + 1, Scalar::zero(f));
  if (!p.is_zero())
    for (int c = 0; c <= d; ++c) v[c] = p.coeffs()[c];
  return v;
}

std::vector<std::vector<HomPoly>> adjugate(const std::vector<std::vector<HomPoly>>& m, const Field& f) {
  const std::size_t n = m.size();
  std::vector<std::vector<HomPoly>> adj(n, std::vector<HomPoly>(n, HomPoly(f)));
  if (n == 1) {
    adj[0][0] = HomPoly::constant(Scalar::one(f));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      // adj_{ih} = (-1)^(i+h) det(m without row h, column i)
      std::vector<std::vector<HomPoly>> sub;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == h) continue;
        std::vector<HomPoly> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i) row.push_back(m[a][b]);
        sub.push_back(row);
      }
      HomPoly d = determinant(sub, f);
      adj[i][h] = (i + h) % 2 ? -d : d;
    }
  return adj;
}

}  // namespace

std::string UnknownBlock::label() const {
  switch (kind) {
    case Pij:
      return "P^" + std::to_string(i) + std::to_string(j);
    case Ps:
      return "P^" + std::to_string(s + 1);
    case Qijl:
      return "Q^" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(l);
  }
  return "?";
}

std::size_t NormalSystem::pij(int i, int j) const {
  if (i > j) std::swap(i, j);
  const int m = rope.r + 1;
  return static_cast<std::size_t>(i * m - i * (i - 1) / 2 + (j - i));
}

std::size_t NormalSystem::ps(int s) const {
  const int m = rope.r + 1;
  return static_cast<std::size_t>(m * (m + 1) / 2 + s);
}

std::size_t NormalSystem::qijl(int l, int i, int j) const {
  if (i > j) std::swap(i, j);
  const int m = rope.r + 1;
  return ps(rope.k) + static_cast<std::size_t>(l * (m * (m + 1) / 2)) + pij(i, j);
}

NormalSystem assemble_system(const Rope& c) {
  NormalSystem ns{c, {}, LinearSystem(c.field, 0), 0};
  const int m = c.r + 1, rows = c.r + 1 - c.k;
  std::size_t off = 0;
  auto push = [&](UnknownBlock b) {
    b.offset = off;
    off += b.degree + 1;
    ns.blocks.push_back(b);
  };
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) push({UnknownBlock::Pij, i, j, 0, 0, 2, 0});
  for (int s = 0; s < c.k; ++s) push({UnknownBlock::Ps, 0, 0, s, 0, c.beta[s] + 1, 0});
  for (int l = 0; l < rows; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) push({UnknownBlock::Qijl, i, j, 0, l, c.alpha[l] + 1, 0});
  ns.sys = LinearSystem(c.field, off);
  for (int s = 0; s < c.k; ++s)
    for (int l = 0; l < rows; ++l) ns.free_params += c.beta[s] + c.alpha[l] + 1;

  const auto& A = c.A;
  const auto& B = c.B;
  // 1. P^{ih} a_{lj} - P^{jh} a_{li} = 0
  for (int l = 0; l < rows; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int h = 0; h < m; ++h)
          add_equation(ns, {{ns.pij(i, h), A.entry(l, j)}, {ns.pij(j, h), -A.entry(l, i)}});
  // 2. sum_i b_{is} P^{ij} = 0
  for (int s = 0; s < c.k; ++s)
    for (int j = 0; j < m; ++j) {
      std::vector<Term> t;
      for (int i = 0; i < m; ++i) t.push_back({ns.pij(i, j), B.entry(i, s)});
      add_equation(ns, t);
    }
  // 3. sum_i b_{is} Q^{ij}_l + P^s a_{lj} = 0
  for (int s = 0; s < c.k; ++s)
    for (int l = 0; l < rows; ++l)
      for (int j = 0; j < m; ++j) {
        std::vector<Term> t;
        for (int i = 0; i < m; ++i) t.push_back({ns.qijl(l, i, j), B.entry(i, s)});
        t.push_back({ns.ps(s), A.entry(l, j)});
        add_equation(ns, t);
      }
  return ns;
}

Vec to_vector(const NormalSystem& ns, const NormalSolution& sol) {
  const Rope& c = ns.rope;
  const int m = c.r + 1;
  Vec v(ns.nunknowns(), Scalar::zero(c.field));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      require(sol.P[i][j] == sol.P[j][i], Errc::ShapeError, "P block is not symmetric");
      put_poly(ns, ns.pij(i, j), sol.P[i][j], v);
    }
  for (int s = 0; s < c.k; ++s) put_poly(ns, ns.ps(s), sol.Ps[s], v);
  for (int l = 0; l < c.r + 1 - c.k; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        require(sol.Q[l][i][j] == sol.Q[l][j][i], Errc::ShapeError, "Q block is not symmetric");
        put_poly(ns, ns.qijl(l, i, j), sol.Q[l][i][j], v);
      }
  return v;
}

NormalSolution from_vector(const NormalSystem& ns, const Vec& v) {
  const Rope& c = ns.rope;
  const int m = c.r + 1, rows = c.r + 1 - c.k;
  NormalSolution s;
  s.P.assign(m, std::vector<HomPoly>(m, HomPoly(c.field)));
  s.Q.assign(rows, std::vector<std::vector<HomPoly>>(m, std::vector<HomPoly>(m, HomPoly(c.field))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.P[i][j] = block_poly(ns, ns.pij(i, j), v);
  for (int q = 0; q < c.k; ++q) s.Ps.push_back(block_poly(ns, ns.ps(q), v));
  for (int l = 0; l < rows; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s.Q[l][i][j] = block_poly(ns, ns.qijl(l, i, j), v);
  return s;
}

bool satisfies(const NormalSystem& ns, const Vec& v) {
  for (const auto& row : ns.sys.rows) {
    Scalar acc = Scalar::zero(ns.rope.field);
    for (const auto& [col, a] : row) acc += a * v[col];
    if (!acc.is_zero()) return false;
  }
  return true;
}

NormalSections h0_normal(const Rope& c) {
  NormalSystem ns = assemble_system(c);
  Kernel k = kernel(ns.sys);
  NormalSections sec;
  sec.free_params = ns.free_params;
  sec.h0 = static_cast<long long>(k.nullity()) + ns.free_params;
  for (const auto& v : k.basis) sec.basis.push_back(from_vector(ns, v));
  sec.p_in_image = check_p_in_image(c, sec);
  return sec;
}

bool check_pij(const Rope& c, const NormalSections& sec) {
  const int m = c.r + 1;
  // genus -1 double lines: the P block is c (a_{0i} a_{0j}); in block form
  // only (P^00, P^01, P^11) survive
  const bool line_case = c.degree() == 2 && c.genus == -1;
  bool seen = false;
  for (const auto& s : sec.basis) {
    if (!line_case) {
      for (const auto& row : s.P)
        for (const auto& x : row)
          if (!x.is_zero()) return false;
      continue;
    }
    std::optional<Scalar> ratio;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const HomPoly ref = c.A.entry(0, i) * c.A.entry(0, j);
        const HomPoly& got = s.P[i][j];
        if (ref.is_zero()) {
          if (!got.is_zero()) return false;
          continue;
        }
        if (!ratio) {
          int q = 0;
          while (ref.coeffs()[q].is_zero()) ++q;
          ratio = got.coeff(q) / ref.coeffs()[q];
        }
        if (hp_scale(ref, *ratio) != got) return false;
      }
    if (ratio && !ratio->is_zero()) seen = true;
  }
  return !line_case || seen;
}

bool check_p_in_image(const Rope& c, const NormalSections& sec) {
  const Field& f = c.field;
  const int m = c.r + 1;
  std::vector<std::size_t> off(c.k + 1, 0);
  for (int s = 0; s < c.k; ++s) off[s + 1] = off[s] + c.beta[s] + 2;
  RowSpace img(f, off[c.k]);
  // images of lambda = t e_i and u e_i under lambda -> B^t lambda
  for (int i = 0; i < m; ++i)
    for (const HomPoly& x : {HomPoly::t(f), HomPoly::u(f)}) {
      Vec v(off[c.k], Scalar::zero(f));
      for (int s = 0; s < c.k; ++s) {
        Vec cv = coeff_vec(c.B.entry(i, s) * x, c.beta[s] + 1, f);
        std::copy(cv.begin(), cv.end(), v.begin() + off[s]);
      }
      img.insert(v);
    }
  for (const auto& sol : sec.basis) {
    Vec v(off[c.k], Scalar::zero(f));
    for (int s = 0; s < c.k; ++s) {
      Vec cv = coeff_vec(sol.Ps[s], c.beta[s] + 1, f);
      std::copy(cv.begin(), cv.end(), v.begin() + off[s]);
    }
    if (!img.contains(v)) return false;
  }
  return true;
}

int normal_lower_bound(const Rope& c) {
  if (c.degree() <= 2) fail(Errc::PreconditionViolated, "the estimate needs degree at least 3");
  if (c.alpha.front() < 2) fail(Errc::PreconditionViolated, "the estimate needs alpha_0 >= 2");
  int v = (c.r + 1) * (2 + c.k - c.genus) - c.k * c.k;
  const int rows = static_cast<int>(c.alpha.size());
  for (int l = 0; l < rows; ++l)
    for (int h = 0; h < rows; ++h)
      for (int w = h; w < rows; ++w) v += std::max(0, c.alpha[l] - c.alpha[h] - c.alpha[w] + 2);
  return v;
}

int expected_h0_if_p_in_image(const Rope& c) { return normal_lower_bound(c); }

long long double_line_formula(int n, int g, long long characteristic) {
  require(n >= 3 && g <= -1, Errc::PreconditionViolated, "double lines need n >= 3 and g <= -1");
  if (g == -1) return 4LL * (n - 1);
  if (characteristic != 2) return static_cast<long long>(n - 1) * (3 - g) - 1;
  return static_cast<long long>(n) * (3 - g) - 6;
}

NormalSolution double_line_solution_oracle(const Rope& c, const DoubleLineParams& p) {
  const Field& f = c.field;
  require(c.degree() == 2, Errc::PreconditionViolated, "the oracle covers double lines only");
  const bool two = f.characteristic() == 2;
  const int m = c.r + 1, k = c.k;
  if (two) {
    require(p.lambda.empty(), Errc::CharMismatch, "characteristic 2 takes P^s, not lambda");
    require(static_cast<int>(p.P.size()) == k, Errc::CharMismatch, "characteristic 2 needs one P^s per column");
    require(!p.c_prime || c.genus == -1, Errc::CharMismatch, "c' only exists for genus -1");
  } else {
    require(p.P.empty() && !p.c_prime, Errc::CharMismatch, "characteristic != 2 takes lambda only");
    require(static_cast<int>(p.lambda.size()) == m, Errc::CharMismatch, "need r+1 linear forms lambda");
  }
  require(!p.c_line || c.genus == -1, Errc::PreconditionViolated, "the quadric line exists for genus -1 only");

  // block form: rows 0..r' carry A', rows r'+1..r are hit by constant columns
  int rp = -1;
  while (rp + 1 < m && !c.A.entry(0, rp + 1).is_zero()) ++rp;
  for (int j = rp + 1; j < m; ++j) require(c.A.entry(0, j).is_zero(), Errc::NotBlockForm, "A is not (A' 0)");
  std::vector<int> main_cols, unit_row(k, -1);
  std::vector<Scalar> unit_val(k, Scalar::zero(f));
  std::vector<int> row_hit(m, -1);
  for (int s = 0; s < k; ++s) {
    if (c.beta[s] > 0) {
      main_cols.push_back(s);
      for (int j = rp + 1; j < m; ++j)
        require(c.B.entry(j, s).is_zero(), Errc::NotBlockForm, "B' leaks into the constant rows");
      continue;
    }
    for (int j = 0; j < m; ++j) {
      if (c.B.entry(j, s).is_zero()) continue;
      require(j > rp && unit_row[s] < 0, Errc::NotBlockForm, "constant column of B is not a unit column");
      unit_row[s] = j;
      unit_val[s] = c.B.entry(j, s).coeffs()[0];
    }
    require(unit_row[s] >= 0 && row_hit[unit_row[s]] < 0, Errc::NotBlockForm, "constant columns must hit distinct rows");
    row_hit[unit_row[s]] = s;
  }
  require(static_cast<int>(main_cols.size()) == rp, Errc::NotBlockForm, "B' has the wrong shape");

  NormalSolution sol;
  sol.P.assign(m, std::vector<HomPoly>(m, HomPoly(f)));
  sol.Ps.assign(k, HomPoly(f));
  sol.Q.assign(1, std::vector<std::vector<HomPoly>>(m, std::vector<HomPoly>(m, HomPoly(f))));
  auto& Q = sol.Q[0];
  auto a = [&](int j) { return c.A.entry(0, j); };
  auto b = [&](int i, int s) { return c.B.entry(i, s); };

  if (p.c_line) {
    sol.P[0][0] = hp_scale(a(0) * a(0), *p.c_line);
    sol.P[0][1] = sol.P[1][0] = hp_scale(a(0) * a(1), *p.c_line);
    sol.P[1][1] = hp_scale(a(1) * a(1), *p.c_line);
  }

  if (!two) {
    const Scalar half = scalar_inv(Scalar(f, 2));
    for (int s : main_cols) {
      HomPoly acc(f);
      for (int j = 0; j <= rp; ++j) acc = acc + p.lambda[j] * b(j, s);
      sol.Ps[s] = hp_scale(acc, -half);
    }
    for (int s = 0; s < k; ++s)
      if (unit_row[s] >= 0) sol.Ps[s] = hp_scale(p.lambda[unit_row[s]], -unit_val[s]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i <= rp && j <= rp)
          Q[i][j] = hp_scale(p.lambda[i] * a(j) + p.lambda[j] * a(i), half);
        else if (i <= rp)
          Q[i][j] = p.lambda[j] * a(i);
        else if (j <= rp)
          Q[i][j] = p.lambda[i] * a(j);
      }
    return sol;
  }

  // characteristic 2: particular solution with zero diagonal from the
  // adjugate of (B'_j)^t, scaled by kappa with a_{0j} = kappa (-1)^j det B'_j
  for (int s = 0; s < k; ++s) sol.Ps[s] = p.P[s];
  auto bprime_minus_row = [&](int j) {
    std::vector<std::vector<HomPoly>> mt(rp, std::vector<HomPoly>(rp, HomPoly(f)));
    // transposed: mt[col][row']
    int rr = 0;
    for (int i = 0; i <= rp; ++i) {
      if (i == j) continue;
      for (int q = 0; q < rp; ++q) mt[q][rr] = b(i, main_cols[q]);
      ++rr;
    }
    return mt;
  };
  auto det_minus_row = [&](int j) {
    auto mt = bprime_minus_row(j);
    return rp == 0 ? HomPoly::constant(Scalar::one(f)) : determinant(mt, f);
  };
  HomPoly d0 = det_minus_row(0);
  int lead = 0;
  while (d0.coeffs()[lead].is_zero()) ++lead;
  Scalar kappa = a(0).coeff(lead) / d0.coeffs()[lead];
  for (int j = 0; j <= rp; ++j) {
    HomPoly dj = det_minus_row(j);
    require(hp_scale(dj, kappa) == a(j), Errc::InternalError, "A is not the signed minor vector of B'");
  }
  for (int j = 0; j <= rp; ++j) {
    if (rp == 0) break;
    auto adj = adjugate(bprime_minus_row(j), f);
    int rr = 0;
    for (int i = 0; i <= rp; ++i) {
      if (i == j) continue;
      HomPoly acc(f);
      for (int h = 0; h < rp; ++h) acc = acc + adj[rr][h] * sol.Ps[main_cols[h]];
      Q[i][j] = hp_scale(acc, kappa);
      ++rr;
    }
  }
  if (p.c_prime) {
    for (int i = 0; i <= std::min(rp, 1); ++i)
      for (int j = 0; j <= std::min(rp, 1); ++j) Q[i][j] = Q[i][j] + hp_scale(a(i) * a(j), *p.c_prime);
  }
  for (int s = 0; s < k; ++s) {
    if (unit_row[s] < 0) continue;
    const int j0 = unit_row[s];
    for (int i = 0; i <= rp; ++i) Q[i][j0] = Q[j0][i] = hp_scale(a(i) * sol.Ps[s], scalar_inv(unit_val[s]));
  }
  return sol;
}

}  // namespace ropelab
