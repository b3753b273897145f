#include "ropelab/graded.hpp"

#include <algorithm>
#include <numeric>

namespace ropelab {

std::size_t GradedFreeModule::dim(int d) const {
  std::size_t s = 0;
  for (int a : twists)
    if (d >= a) s += static_cast<std::size_t>(d - a + 1);
  return s;
}

std::size_t GradedFreeModule::offset(int d, std::size_t j) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < j; ++i)
    if (d >= twists[i]) s += static_cast<std::size_t>(d - twists[i] + 1);
  return s;
}

GradedMap::GradedMap(GradedFreeModule source, GradedFreeModule target, std::vector<std::vector<HomPoly>> entries)
    : source_(std::move(source)), target_(std::move(target)), e_(std::move(entries)) {
  if (source_.field != target_.field) fail(Errc::FieldMismatch, "source and target over different fields");
  if (e_.size() != target_.rank()) fail(Errc::ShapeError, "row count differs from target rank");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i].size() != source_.rank()) fail(Errc::ShapeError, "column count differs from source rank");
    for (std::size_t j = 0; j < e_[i].size(); ++j) {
      const HomPoly& p = e_[i][j];
      if (p.field() != source_.field) fail(Errc::FieldMismatch, "entry over wrong field");
      if (!p.is_zero() && p.degree() != source_.twists[j] - target_.twists[i])
        fail(Errc::ShapeError, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                                   std::to_string(p.degree()) + ", expected " +
                                   std::to_string(source_.twists[j] - target_.twists[i]));
    }
  }
}

GradedMap GradedMap::transpose() const {
  GradedFreeModule s{field(), {}}, t{field(), {}};
  for (int b : target_.twists) s.twists.push_back(-b);
  for (int a : source_.twists) t.twists.push_back(-a);
  std::vector<std::vector<HomPoly>> e(cols(), std::vector<HomPoly>(rows(), HomPoly(field())));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) e[j][i] = e_[i][j];
  return GradedMap(std::move(s), std::move(t), std::move(e));
}

GradedMap compose(const GradedMap& m, const GradedMap& n) {
  if (n.target().twists != m.source().twists) fail(Errc::ShapeError, "composition twists do not match");
  const Field f = m.field();
  std::vector<std::vector<HomPoly>> e(m.rows(), std::vector<HomPoly>(n.cols(), HomPoly(f)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      for (std::size_t l = 0; l < m.cols(); ++l) e[i][j] = e[i][j] + m.entry(i, l) * n.entry(l, j);
  return GradedMap(n.source(), m.target(), std::move(e));
}

bool is_zero_map(const GradedMap& m) {
  for (const auto& row : m.entries())
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

LinearSystem degree_piece(const GradedMap& m, int d) {
  const auto& src = m.source();
  const auto& tgt = m.target();
  std::vector<SparseRow> rows(tgt.dim(d));
  for (std::size_t j = 0; j < src.rank(); ++j) {
    const int e = d - src.twists[j];
    if (e < 0) continue;
    const std::size_t scol = src.offset(d, j);
    for (std::size_t r = 0; r < tgt.rank(); ++r) {
      const HomPoly& p = m.entry(r, j);
      if (p.is_zero()) continue;
      const std::size_t trow = tgt.offset(d, r);
      for (int i = 0; i <= e; ++i)
        for (int q = 0; q <= p.degree(); ++q)
          if (!p.coeffs()[q].is_zero()) rows[trow + q + i].emplace_back(scol + i, p.coeffs()[q]);
    }
  }
  LinearSystem sys(m.field(), src.dim(d));
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

std::vector<Vec> dense(const LinearSystem& sys) {
  std::vector<Vec> out(sys.rows.size(), Vec(sys.ncols, Scalar::zero(sys.field)));
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    for (const auto& [c, v] : sys.rows[i]) out[i][c] += v;
  return out;
}

namespace {

// Fraction-free elimination; returns the rank and, for square input, the determinant.
std::size_t bareiss(std::vector<std::vector<HomPoly>>& a, const Field& f, bool full_pivot, HomPoly* det) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  HomPoly prev = HomPoly::constant(Scalar::one(f));
  bool neg = false;
  std::size_t rk = 0;
  for (std::size_t k = 0; k < std::min(n, m); ++k) {
    std::size_t pr = n, pc = m;
    for (std::size_t c = k; c < (full_pivot ? m : k + 1) && pr == n; ++c)
      for (std::size_t r = k; r < n; ++r)
        if (!a[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == n) {
      if (det) *det = HomPoly(f);
      if (!full_pivot) return rk;
      break;
    }
    if (pr != k) {
      std::swap(a[pr], a[k]);
      neg = !neg;
    }
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      neg = !neg;
    }
    ++rk;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        HomPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = hp_divexact(v, prev);
      }
      a[i][k] = HomPoly(f);
    }
    prev = a[k][k];
  }
  if (det && n == m && rk == n) *det = neg ? -a[n - 1][n - 1] : a[n - 1][n - 1];
  if (det && n == 0) *det = HomPoly::constant(Scalar::one(f));
  return rk;
}

// Visits maximal minors in lex order of the deleted index set.
template <class F>
void visit_minors(const GradedMap& m, F&& f) {
  const bool tall = m.rows() >= m.cols();
  const std::size_t big = tall ? m.rows() : m.cols();
  const std::size_t small = tall ? m.cols() : m.rows();
  std::vector<std::size_t> all_small(small);
  std::iota(all_small.begin(), all_small.end(), 0);
  for_each_subset(big, big - small, [&](const std::vector<std::size_t>& del) {
    std::vector<std::size_t> keep;
    std::size_t di = 0;
    for (std::size_t i = 0; i < big; ++i) {
      if (di < del.size() && del[di] == i) ++di;
      else keep.push_back(i);
    }
    auto sub = tall ? submatrix(m, keep, all_small) : submatrix(m, all_small, keep);
    Minor mn{del, determinant(std::move(sub), m.field()), HomPoly(m.field())};
    const std::size_t sigma = std::accumulate(del.begin(), del.end(), std::size_t{0});
    mn.signed_value = sigma % 2 ? -mn.det : mn.det;
    return f(mn);
  });
}

// Multiplies a vector of the degree-c piece by t^(e-i) u^i, landing in degree c+e.
Vec shift(const GradedFreeModule& mod, const Vec& v, int c, int e, int i) {
  const int d = c + e;
  Vec out(mod.dim(d), Scalar::zero(mod.field));
  for (std::size_t j = 0; j < mod.rank(); ++j) {
    const int dj = c - mod.twists[j];
    if (dj < 0) continue;
    const std::size_t from = mod.offset(c, j), to = mod.offset(d, j);
    for (int q = 0; q <= dj; ++q) out[to + q + i] = v[from + q];
  }
  return out;
}

}  // namespace

HomPoly determinant(std::vector<std::vector<HomPoly>> m, const Field& f) {
  for (const auto& row : m)
    if (row.size() != m.size()) fail(Errc::ShapeError, "determinant of a non-square matrix");
  HomPoly det(f);
  bareiss(m, f, false, &det);
  return det;
}

std::size_t generic_rank(const GradedMap& m) {
  auto a = m.entries();
  return bareiss(a, m.field(), true, nullptr);
}

std::vector<std::vector<HomPoly>> submatrix(const GradedMap& m, const std::vector<std::size_t>& rows,
                                            const std::vector<std::size_t>& cols) {
  std::vector<std::vector<HomPoly>> s(rows.size(), std::vector<HomPoly>(cols.size(), HomPoly(m.field())));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s[i][j] = m.entry(rows[i], cols[j]);
  return s;
}

std::vector<Minor> maximal_minors(const GradedMap& m) {
  if (m.rows() == 0 || m.cols() == 0) fail(Errc::ShapeError, "empty matrix has no maximal minors");
  std::vector<Minor> out;
  visit_minors(m, [&](const Minor& mn) {
    out.push_back(mn);
    return true;
  });
  return out;
}

bool minors_codim2(const GradedMap& m) {
  if (m.rows() == 0 || m.cols() == 0) return false;
  HomPoly g(m.field());
  bool found = false;
  visit_minors(m, [&](const Minor& mn) {
    if (mn.det.is_zero()) return true;
    g = found ? hp_gcd({g, mn.det}) : hp_monic(mn.det);
    found = true;
    return g.degree() > 0;
  });
  return found && g.degree() == 0;
}

std::size_t coker_hilbert(const GradedMap& m, int d) {
  const LinearSystem sys = degree_piece(m, d);
  // rank of the map equals rank of its matrix; rows are target coordinates
  return m.target().dim(d) - rank(sys);
}

int default_kernel_bound(const GradedMap& m) {
  int mx = 0;
  for (int a : m.source().twists) mx = std::max(mx, a);
  int sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int rowmax = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.entry(i, j).is_zero()) rowmax = std::max(rowmax, m.entry(i, j).degree());
    sum += rowmax;
  }
  return mx + sum + 2;
}

KernelResult kernel_with_certificate(const GradedMap& m, int degree_bound) {
  const GradedFreeModule& src = m.source();
  const Field f = m.field();
  int lo = degree_bound;
  for (int a : src.twists) lo = std::min(lo, a);
  KernelResult res;
  std::vector<std::pair<int, Vec>> gens;
  for (int d = lo; d <= degree_bound; ++d) {
    const Kernel ker = kernel(degree_piece(m, d));
    RowSpace sub(f, src.dim(d));
    for (const auto& [c, v] : gens)
      for (int i = 0; i <= d - c; ++i) sub.insert(shift(src, v, c, d - c, i));
    for (const auto& v : ker.basis)
      if (sub.insert(v)) gens.emplace_back(d, v);
    res.degrees.push_back(d);
    res.kernel_dims.push_back(ker.nullity());
    res.generated_dims.push_back(sub.rank());
  }
  const std::size_t n = res.degrees.size();
  for (std::size_t i = (n >= 2 ? n - 2 : 0); i < n; ++i)
    if (res.kernel_dims[i] != res.generated_dims[i]) fail(Errc::BoundTooSmall, "kernel Hilbert function mismatch");

  GradedFreeModule gsrc{f, {}};
  for (const auto& g : gens) gsrc.twists.push_back(g.first);
  std::vector<std::vector<HomPoly>> e(src.rank(), std::vector<HomPoly>(gens.size(), HomPoly(f)));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& [c, v] = gens[g];
    for (std::size_t j = 0; j < src.rank(); ++j) {
      const int dj = c - src.twists[j];
      if (dj < 0) continue;
      const std::size_t off = src.offset(c, j);
      e[j][g] = HomPoly(f, dj, Vec(v.begin() + off, v.begin() + off + dj + 1));
    }
  }
  res.generators = GradedMap(std::move(gsrc), src, std::move(e));

  const std::size_t corank = m.cols() - generic_rank(m);
  if (gens.size() > corank) fail(Errc::InternalError, "kernel is not free: too many generators");
  if (gens.size() < corank) fail(Errc::BoundTooSmall, "kernel generators missing above degree bound");
  if (corank > 0 && !minors_codim2(res.generators))
    fail(Errc::BoundTooSmall, "generated submodule is not saturated");
  return res;
}

GradedMap kernel_generators(const GradedMap& m, int degree_bound) {
  return kernel_with_certificate(m, degree_bound).generators;
}

}  // namespace ropelab
