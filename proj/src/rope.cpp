#include "ropelab/rope.hpp"

#include <algorithm>
#include <numeric>

namespace ropelab {

bool Rope::nondegenerate() const {
  for (int b : beta)
    if (b < 1) return false;
  return true;
}

namespace {

int line_degree(const std::vector<HomPoly>& ps, const char* what) {
  int d = -1;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    if (d >= 0 && p.degree() != d) fail(Errc::ShapeError, std::string(what) + " entries have mixed degrees");
    d = p.degree();
  }
  if (d < 0) fail(Errc::ShapeError, std::string(what) + " is identically zero");
  return d;
}

std::vector<std::size_t> sorted_order(const std::vector<int>& v) {
  std::vector<std::size_t> o(v.size());
  std::iota(o.begin(), o.end(), 0);
  std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return o;
}

GradedMap sort_B_columns(const GradedMap& B) {
  std::vector<int> tw = B.source().twists;
  auto o = sorted_order(tw);
  GradedFreeModule src{B.field(), {}};
  std::vector<std::vector<HomPoly>> e(B.rows());
  for (std::size_t j : o) {
    src.twists.push_back(tw[j]);
    for (std::size_t i = 0; i < B.rows(); ++i) e[i].push_back(B.entry(i, j));
  }
  return GradedMap(src, B.target(), e);
}

GradedMap sort_A_rows(const GradedMap& A) {
  std::vector<int> alpha;
  for (int t : A.target().twists) alpha.push_back(1 - t);
  auto o = sorted_order(alpha);
  GradedFreeModule tgt{A.field(), {}};
  std::vector<std::vector<HomPoly>> e;
  for (std::size_t i : o) {
    tgt.twists.push_back(A.target().twists[i]);
    e.push_back(A.entries()[i]);
  }
  return GradedMap(A.source(), tgt, e);
}

void check_n(int n) {
  if (n < 3 || n > kMaxVars - 1) fail(Errc::ShapeError, "ambient dimension must satisfy 3 <= n <= 15");
}

}  // namespace

GradedMap make_B(const Field& f, const std::vector<std::vector<HomPoly>>& entries) {
  if (entries.empty() || entries[0].empty()) fail(Errc::ShapeError, "empty B");
  const std::size_t k = entries[0].size();
  GradedFreeModule src{f, {}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<HomPoly> col;
    for (const auto& row : entries) {
      if (row.size() != k) fail(Errc::ShapeError, "ragged B");
      col.push_back(row[j]);
    }
    src.twists.push_back(line_degree(col, "column of B") + 1);
  }
  return GradedMap(src, {f, std::vector<int>(entries.size(), 1)}, entries);
}

GradedMap make_A(const Field& f, const std::vector<std::vector<HomPoly>>& entries) {
  if (entries.empty() || entries[0].empty()) fail(Errc::ShapeError, "empty A");
  GradedFreeModule tgt{f, {}};
  for (const auto& row : entries) {
    if (row.size() != entries[0].size()) fail(Errc::ShapeError, "ragged A");
    tgt.twists.push_back(1 - line_degree(row, "row of A"));
  }
  return GradedMap({f, std::vector<int>(entries[0].size(), 1)}, tgt, entries);
}

Rope rope_from_B(int n, const GradedMap& Bin) {
  check_n(n);
  const Field f = Bin.field();
  const int r = n - 2;
  if (static_cast<int>(Bin.rows()) != r + 1) fail(Errc::ShapeError, "B must have n-1 rows");
  const int k = static_cast<int>(Bin.cols());
  if (k < 1 || k > r) fail(Errc::ShapeError, "B must have between 1 and n-2 columns");
  for (int t : Bin.target().twists)
    if (t != 1) fail(Errc::ShapeError, "target twists of B must all be 1");
  for (int t : Bin.source().twists)
    if (t < 1) fail(Errc::ShapeError, "column degrees of B must be nonnegative");
  if (!minors_codim2(Bin)) fail(Errc::CodimTooSmall, "maximal minors of B do not have codimension 2");

  Rope c;
  c.field = f;
  c.n = n;
  c.r = r;
  c.k = k;
  c.B = sort_B_columns(Bin);
  for (int t : c.B.source().twists) c.beta.push_back(t - 1);

  // left kernel of B: kernel of B^t with source twists 0
  GradedFreeModule src{f, std::vector<int>(r + 1, 0)}, tgt{f, {}};
  for (int b : c.beta) tgt.twists.push_back(-b);
  std::vector<std::vector<HomPoly>> bt(k, std::vector<HomPoly>(r + 1, HomPoly(f)));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j < k; ++j) bt[j][i] = c.B.entry(i, j);
  GradedMap M(src, tgt, bt);
  GradedMap K = kernel_generators(M, default_kernel_bound(M));
  if (static_cast<int>(K.cols()) != r + 1 - k) fail(Errc::InternalError, "left kernel of B has wrong rank");

  std::vector<std::vector<HomPoly>> a(K.cols(), std::vector<HomPoly>(r + 1, HomPoly(f)));
  GradedFreeModule at{f, {}};
  for (std::size_t i = 0; i < K.cols(); ++i) {
    c.alpha.push_back(K.source().twists[i]);
    at.twists.push_back(1 - K.source().twists[i]);
    for (int j = 0; j <= r; ++j) a[i][j] = K.entry(j, i);
  }
  c.A = GradedMap({f, std::vector<int>(r + 1, 1)}, at, a);
  const int sa = std::accumulate(c.alpha.begin(), c.alpha.end(), 0);
  const int sb = std::accumulate(c.beta.begin(), c.beta.end(), 0);
  if (sa != sb) fail(Errc::InternalError, "degree sums of the two types differ");
  c.genus = -sb;
  if (!is_zero_map(compose(c.A, c.B))) fail(Errc::InternalError, "A B is not zero");
  if (!minors_codim2(c.A)) fail(Errc::InternalError, "computed A fails the codimension test");
  return c;
}

Rope rope_from_A(int n, const GradedMap& Ain) {
  check_n(n);
  const Field f = Ain.field();
  const int r = n - 2;
  if (static_cast<int>(Ain.cols()) != r + 1) fail(Errc::ShapeError, "A must have n-1 columns");
  const int m = static_cast<int>(Ain.rows());
  if (m < 1 || m > r) fail(Errc::ShapeError, "A must have between 1 and n-2 rows");
  for (int t : Ain.source().twists)
    if (t != 1) fail(Errc::ShapeError, "source twists of A must all be 1");
  for (int t : Ain.target().twists)
    if (1 - t < 0) fail(Errc::ShapeError, "row degrees of A must be nonnegative");
  if (static_cast<int>(generic_rank(Ain)) != m) fail(Errc::RankDeficient, "A does not have full generic rank");
  if (!minors_codim2(Ain)) fail(Errc::CodimTooSmall, "maximal minors of A do not have codimension 2");
  GradedMap A = sort_A_rows(Ain);

  GradedFreeModule src{f, std::vector<int>(r + 1, 0)}, tgt{f, {}};
  for (int t : A.target().twists) tgt.twists.push_back(t - 1);
  GradedMap M(src, tgt, A.entries());
  GradedMap K = kernel_generators(M, default_kernel_bound(M));
  GradedFreeModule bs{f, {}};
  for (int b : K.source().twists) bs.twists.push_back(b + 1);
  GradedMap B(bs, {f, std::vector<int>(r + 1, 1)}, K.entries());

  Rope c = rope_from_B(n, B);
  if (!same_row_span(c.A, A)) fail(Errc::InternalError, "recomputed A spans a different module");
  c.A = A;
  return c;
}

Rng::Rng(std::uint64_t seed) : eng_(seed) {}

std::uint64_t Rng::next() { return eng_(); }

long long Rng::range(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(eng_() % span);
}

Scalar Rng::scalar(const Field& f) {
  if (f.is_rational()) return Scalar(f, range(-20, 20));
  return Scalar(f, static_cast<long long>(eng_() % f.characteristic()));
}

Scalar Rng::nonzero_scalar(const Field& f) {
  while (true) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

HomPoly Rng::poly(const Field& f, int deg) {
  std::vector<Scalar> c;
  for (int i = 0; i <= deg; ++i) c.push_back(scalar(f));
  return HomPoly(f, deg, c);
}

Rope random_rope(int n, std::vector<int> alpha, const Field& f, std::uint64_t seed, RandomStats* stats) {
  check_n(n);
  const int r = n - 2;
  std::sort(alpha.begin(), alpha.end());
  if (alpha.empty() || static_cast<int>(alpha.size()) > r) fail(Errc::ShapeError, "type must have 1..n-2 entries");
  if (alpha.front() < 0) fail(Errc::ShapeError, "type entries must be nonnegative");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) < 1) fail(Errc::ShapeError, "type must have positive sum");
  Rng rng(seed);
  for (int attempt = 1; attempt <= 100; ++attempt) {
    if (stats) stats->attempts = attempt;
    std::vector<std::vector<HomPoly>> a;
    for (int ai : alpha) {
      std::vector<HomPoly> row;
      for (int j = 0; j <= r; ++j) row.push_back(rng.poly(f, ai));
      a.push_back(row);
    }
    GradedMap A;
    try {
      A = make_A(f, a);
    } catch (const Error&) {
      continue;  // an all-zero row
    }
    if (static_cast<int>(generic_rank(A)) != static_cast<int>(alpha.size()) || !minors_codim2(A)) continue;
    return rope_from_A(n, A);
  }
  fail(Errc::GenerationFailed, "no valid rope after 100 attempts");
}

int binom1(int a) { return a >= 1 ? a : 0; }

long long binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

int hilbert_function(const Rope& c, int j) {
  int h = binom1(j + 1) + (c.r + 1) * binom1(j);
  for (int b : c.beta) h -= binom1(j - b);
  return h;
}

int rao_function(const Rope& c, int i) {
  int s = 0;
  for (int a : c.alpha) s += binom1(i + a);
  for (int b : c.beta) s += binom1(i - b);
  return s - (c.r + 1) * binom1(i);
}

int rao_via_cokerA(const Rope& c, int i) { return static_cast<int>(coker_hilbert(c.A, i)); }

int rao_split_formula(const Rope& c, int i) {
  int s = 0;
  if (i <= 0) {
    for (int a : c.alpha) s += binom1(i + a);
    return s;
  }
  s = -c.k * i - c.genus;
  for (int b : c.beta) s += binom1(i - b);
  return s;
}

int regularity(const Rope& c) {
  if (!c.nondegenerate()) fail(Errc::DegenerateRope, "regularity is defined here for nondegenerate ropes");
  return *std::max_element(c.beta.begin(), c.beta.end()) + 1;
}

int h0_structure(const Rope& c, int d) {
  int h = binom1(d + 1);
  for (int a : c.alpha) h += binom1(d + a);
  return h;
}

int BettiTable::alternating_rank_sum() const {
  int s = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int rk = 0;
    for (const auto& kv : gens[i]) rk += kv.second;
    s += (i % 2 == 0 ? 1 : -1) * rk;
  }
  return s;
}

BettiTable betti_table(const Rope& c) {
  if (!c.nondegenerate()) fail(Errc::DegenerateRope, "Betti table requires a nondegenerate rope");
  BettiTable t;
  const long long m = c.n - 1;
  for (int i = 1; i <= c.n; ++i) {
    std::map<int, int> g;
    const long long d = m * binom(m, i) - binom(m, i + 1);
    if (d > 0) g[i + 1] += static_cast<int>(d);
    for (int b : c.beta) {
      const long long q = binom(m, i - 1);
      if (q > 0) g[(i - 1) + b + 1] += static_cast<int>(q);
    }
    t.gens.push_back(g);
  }
  return t;
}

std::vector<MultiPoly> ideal_generators(const Rope& c) {
  const int nv = c.nvars();
  std::vector<MultiPoly> out;
  for (int i = 0; i <= c.r; ++i)
    for (int j = i; j <= c.r; ++j) out.push_back(MultiPoly::var(c.field, nv, i) * MultiPoly::var(c.field, nv, j));
  for (int s = 0; s < c.k; ++s) {
    MultiPoly g(c.field, nv);
    for (int i = 0; i <= c.r; ++i) g += MultiPoly::var(c.field, nv, i) * MultiPoly::from_hompoly(c.B.entry(i, s), nv);
    out.push_back(g);
  }
  return out;
}

std::optional<Scalar> duality_constant(const Rope& c) {
  const std::size_t m = c.r + 1;
  std::vector<std::size_t> arows(c.A.rows()), bcols(c.k);
  std::iota(arows.begin(), arows.end(), 0);
  std::iota(bcols.begin(), bcols.end(), 0);
  std::optional<Scalar> ratio;
  bool ok = true;
  for_each_subset(m, c.k, [&](const std::vector<std::size_t>& I) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0, p = 0; i < m; ++i) {
      if (p < I.size() && I[p] == i) ++p;
      else J.push_back(i);
    }
    HomPoly da = determinant(submatrix(c.A, arows, J), c.field);
    HomPoly db = determinant(submatrix(c.B, I, bcols), c.field);
    const std::size_t sigma = std::accumulate(I.begin(), I.end(), std::size_t{0});
    if (sigma % 2) db = -db;
    if (da.is_zero() != db.is_zero() || (!da.is_zero() && da.degree() != db.degree())) {
      ok = false;
      return false;
    }
    if (da.is_zero()) return true;
    int lead = 0;
    while (da.coeffs()[lead].is_zero()) ++lead;
    if (db.coeffs()[lead].is_zero()) {
      ok = false;
      return false;
    }
    Scalar q = da.coeffs()[lead] / db.coeffs()[lead];
    if (hp_scale(db, q) != da || (ratio && *ratio != q)) {
      ok = false;
      return false;
    }
    ratio = q;
    return true;
  });
  if (!ok) return std::nullopt;
  return ratio;
}

bool same_row_span(const GradedMap& a, const GradedMap& b) {
  if (a.source().twists != b.source().twists) return false;
  const Field f = a.field();
  const auto& st = a.source().twists;
  auto contained = [&](const GradedMap& x, const GradedMap& y) {
    // every row of x lies in the S-span of the rows of y
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const int d = -x.target().twists[i];
      std::vector<std::size_t> off;
      std::size_t len = 0;
      for (int s : st) {
        off.push_back(len);
        if (d + s >= 0) len += d + s + 1;
      }
      // coefficients of row * t^(e-shift) u^shift
      auto flatten = [&](const std::vector<HomPoly>& row, int shift) {
        Vec v(len, Scalar::zero(f));
        for (std::size_t j = 0; j < st.size(); ++j) {
          const HomPoly& p = row[j];
          for (int q = 0; q <= p.degree(); ++q) v[off[j] + q + shift] = p.coeffs()[q];
        }
        return v;
      };
      RowSpace rs(f, len);
      for (std::size_t l = 0; l < y.rows(); ++l) {
        const int e = d - (-y.target().twists[l]);
        if (e < 0) continue;
        for (int u = 0; u <= e; ++u) rs.insert(flatten(y.entries()[l], u));
      }
      if (!rs.contains(flatten(x.entries()[i], 0))) return false;
    }
    return true;
  };
  return contained(a, b) && contained(b, a);
}

}  // namespace ropelab
