#include "ropelab/complex.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

#include "evalfield.hpp"

namespace ropelab {

namespace {

int g_desk_override = 0;

void check_desk(int n) {
  if (n < 3) fail(Errc::ShapeError, "n must be at least 3");
  if (n > desk_bound()) fail(Errc::SizeLimit, "n = " + std::to_string(n) + " exceeds the desk bound " +
                                                   std::to_string(desk_bound()));
}

std::string wedge_label(const std::vector<int>& T) {
  if (T.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (i) s += "^";
    s += "e" + std::to_string(T[i]);
  }
  return s;
}

std::vector<int> erase_at(const std::vector<int>& T, std::size_t m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (i != m) out.push_back(T[i]);
  return out;
}

int koszul_sign(std::size_t m) { return m % 2 == 0 ? 1 : -1; }

MultiPoly xvar(const Field& f, int nv, int i) { return MultiPoly::var(f, nv, i); }

MultiPoly cst(const Field& f, int nv, long long c) { return MultiPoly::constant(Scalar(f, c), nv); }

PolyMatrix zero_matrix(const Field& f, int nv, std::vector<int> src, std::vector<int> tgt) {
  PolyMatrix m;
  m.e.assign(tgt.size(), std::vector<MultiPoly>(src.size(), MultiPoly(f, nv)));
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  return m;
}

// Kept basis of wedge^i P (x) P: pairs (T, j) with j <= max T.
struct DLevel {
  std::vector<std::pair<std::size_t, int>> elems;
  std::vector<long> pos;  // pos[Tidx * m + j] -> index in elems or -1
};

class Splitting {
 public:
  Splitting(int m) : kb_(m), m_(m), levels_(m + 1) {
    for (int i = 1; i <= m; ++i) {
      const auto& sets = kb_.wedge(i);
      DLevel& L = levels_[i];
      L.pos.assign(sets.size() * m, -1);
      for (std::size_t t = 0; t < sets.size(); ++t)
        for (int j = 0; j <= sets[t].back(); ++j) {
          L.pos[t * m + j] = static_cast<long>(L.elems.size());
          L.elems.push_back({t, j});
        }
    }
  }

  const KoszulBasis& basis() const { return kb_; }
  const DLevel& level(int i) const { return levels_.at(i); }

  // Image of e_T (x) e_j in D_|T| as (index, sign) pairs.
  std::vector<std::pair<std::size_t, int>> project(const std::vector<int>& T, int j) const {
    const int lv = static_cast<int>(T.size());
    const DLevel& L = levels_.at(lv);
    const std::size_t t = kb_.index(T);
    long p = L.pos[t * m_ + j];
    if (p >= 0) return {{static_cast<std::size_t>(p), 1}};
    // e_T (x) e_j = -(-1)^(i+1) sum_{m<i} (-1)^(m+1) e_{U - u_m} (x) e_{u_m}, U = T u {j}, i = |U|
    std::vector<int> U = T;
    U.push_back(j);
    const std::size_t i = U.size();
    const int lead = -koszul_sign(i - 1);
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t mm = 0; mm + 1 < i; ++mm) {
      std::vector<int> rest = erase_at(U, mm);
      long q = L.pos[kb_.index(rest) * m_ + U[mm]];
      if (q < 0) fail(Errc::InternalError, "projection hit a discarded coordinate");
      out.push_back({static_cast<std::size_t>(q), lead * koszul_sign(mm)});
    }
    return out;
  }

  std::vector<std::string> labels(int i) const {
    std::vector<std::string> out;
    for (auto [t, j] : levels_[i].elems) out.push_back(wedge_label(kb_.wedge(i)[t]) + "(x)e" + std::to_string(j));
    return out;
  }

 private:
  KoszulBasis kb_;
  int m_;
  std::vector<DLevel> levels_;
};

// d_i : D_i -> D_{i-1}, i >= 2, written into m at the given offsets.
void put_d(PolyMatrix& mat, const Splitting& sp, const Field& f, int nv, int i, std::size_t row0, std::size_t col0) {
  const auto& sets = sp.basis().wedge(i);
  const DLevel& L = sp.level(i);
  for (std::size_t c = 0; c < L.elems.size(); ++c) {
    auto [t, j] = L.elems[c];
    const auto& T = sets[t];
    for (std::size_t mm = 0; mm < T.size(); ++mm) {
      MultiPoly x = xvar(f, nv, T[mm]);
      for (auto [row, sg] : sp.project(erase_at(T, mm), j)) {
        MultiPoly term = x.scaled(Scalar(f, koszul_sign(mm) * sg));
        mat.e[row0 + row][col0 + c] += term;
      }
    }
  }
}

void put_d1(PolyMatrix& mat, const Splitting& sp, const Field& f, int nv, std::size_t col0) {
  const DLevel& L = sp.level(1);
  for (std::size_t c = 0; c < L.elems.size(); ++c) {
    auto [t, j] = L.elems[c];
    int a = sp.basis().wedge(1)[t][0];
    mat.e[0][col0 + c] = xvar(f, nv, a) * xvar(f, nv, j);
  }
}

// (delta_i (x) id) on wedge^i P (x) V with V of rank w, block ordered by (T, v).
void put_koszul_tensor(PolyMatrix& mat, const KoszulBasis& kb, const Field& f, int nv, int i, std::size_t w,
                       std::size_t row0, std::size_t col0, int sign = 1) {
  const auto& sets = kb.wedge(i);
  for (std::size_t t = 0; t < sets.size(); ++t)
    for (std::size_t mm = 0; mm < sets[t].size(); ++mm) {
      std::size_t tt = kb.index(erase_at(sets[t], mm));
      MultiPoly x = xvar(f, nv, sets[t][mm]).scaled(Scalar(f, sign * koszul_sign(mm)));
      for (std::size_t v = 0; v < w; ++v) mat.e[row0 + tt * w + v][col0 + t * w + v] += x;
    }
}

struct EvalCache {
  std::mutex mu;
  std::map<std::uint32_t, std::unique_ptr<detail::EvalField>> fields;
};

const detail::EvalField& eval_field(const Field& f) {
  static EvalCache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.fields[f.characteristic()];
  if (!slot) slot = std::make_unique<detail::EvalField>(f);
  return *slot;
}

std::uint64_t eval_poly(const MultiPoly& p, const detail::EvalField& F,
                        const std::vector<std::vector<std::uint64_t>>& powers) {
  std::uint64_t acc = 0;
  for (const auto& [mono, c] : p.terms()) {
    std::uint64_t v = F.embed(c);
    for (int i = 0; i < p.nvars() && v; ++i)
      if (mono.e[i]) v = F.mul(v, powers[i][mono.e[i]]);
    acc = F.add(acc, v);
  }
  return acc;
}

}  // namespace

int desk_bound() {
  if (g_desk_override > 0) return g_desk_override;
  if (const char* s = std::getenv("ROPELAB_DESK_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 3 && v <= kMaxVars - 1) return static_cast<int>(v);
  }
  return 6;
}

void set_desk_bound(int n) { g_desk_override = n; }

KoszulBasis::KoszulBasis(int m) : m_(m), sets_(m + 1) {
  require(m >= 1 && m < 31, Errc::ShapeError, "Koszul basis rank out of range");
  for (int i = 0; i <= m; ++i)
    for_each_subset(static_cast<std::size_t>(m), static_cast<std::size_t>(i), [&](const std::vector<std::size_t>& s) {
      std::vector<int> T(s.begin(), s.end());
      sets_[i].push_back(T);
      return true;
    });
}

std::size_t KoszulBasis::index(const std::vector<int>& T) const {
  // rank of T among lex-ordered subsets of its size
  const std::size_t k = T.size();
  std::size_t r = 0;
  int prev = -1;
  for (std::size_t i = 0; i < k; ++i) {
    for (int v = prev + 1; v < T[i]; ++v) r += static_cast<std::size_t>(binom(m_ - 1 - v, static_cast<long long>(k - 1 - i)));
    prev = T[i];
  }
  return r;
}

PolyMatrix koszul_map(const Field& f, int n, int i) {
  const int m = n - 1, nv = n + 1;
  KoszulBasis kb(m);
  require(i >= 1 && i <= m, Errc::RangeError, "Koszul index out of range");
  PolyMatrix mat = zero_matrix(f, nv, std::vector<int>(kb.wedge(i).size(), i),
                               std::vector<int>(kb.wedge(i - 1).size(), i - 1));
  put_koszul_tensor(mat, kb, f, nv, i, 1, 0, 0);
  return mat;
}

long long hf_square_of_line(int n, int d) {
  if (d < 0) return 0;
  return (d + 1) + static_cast<long long>(n - 1) * d;
}

ComplexRep i2_resolution(int n, const Field& f) {
  check_desk(n);
  const int m = n - 1, nv = n + 1;
  KoszulBasis kb(m);
  ComplexRep c;
  c.field = f;
  c.nvars = nv;
  c.name = "i2";
  c.modules.push_back({0});
  c.labels.push_back({"1"});
  // F_1 = P (x) P, F_i = wedge^i P (x) P + wedge^i P
  for (int i = 1; i <= m; ++i) {
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (const auto& T : kb.wedge(i))
      for (int j = 0; j < m; ++j) {
        deg.push_back(i + 1);
        lab.push_back(wedge_label(T) + "(x)e" + std::to_string(j));
      }
    if (i >= 2)
      for (const auto& T : kb.wedge(i)) {
        deg.push_back(i);
        lab.push_back(wedge_label(T));
      }
    c.modules.push_back(deg);
    c.labels.push_back(lab);
  }
  for (int i = 1; i <= m; ++i) {
    PolyMatrix mat = zero_matrix(f, nv, c.modules[i], c.modules[i - 1]);
    const std::size_t tens = kb.wedge(i).size() * m;
    if (i == 1) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mat.e[0][a * m + b] = xvar(f, nv, a) * xvar(f, nv, b);
    } else {
      put_koszul_tensor(mat, kb, f, nv, i, m, 0, 0);
      // canonical map wedge^i P -> wedge^(i-1) P (x) P with sign (-1)^i
      const int s = i % 2 == 0 ? 1 : -1;
      const auto& sets = kb.wedge(i);
      for (std::size_t t = 0; t < sets.size(); ++t)
        for (std::size_t mm = 0; mm < sets[t].size(); ++mm) {
          std::size_t row = kb.index(erase_at(sets[t], mm)) * m + sets[t][mm];
          mat.e[row][tens + t] += cst(f, nv, s * koszul_sign(mm));
        }
      // shifted copy of the Koszul complex carries the cone sign
      if (i >= 3) put_koszul_tensor(mat, kb, f, nv, i, 1, kb.wedge(i - 1).size() * m, tens, -1);
    }
    c.maps.push_back(std::move(mat));
  }
  return c;
}

ComplexRep minimal_i2_resolution(int n, const Field& f) {
  check_desk(n);
  const int m = n - 1, nv = n + 1;
  Splitting sp(m);
  ComplexRep c;
  c.field = f;
  c.nvars = nv;
  c.name = "i2_minimal";
  c.modules.push_back({0});
  c.labels.push_back({"1"});
  for (int i = 1; i <= m; ++i) {
    c.modules.push_back(std::vector<int>(sp.level(i).elems.size(), i + 1));
    c.labels.push_back(sp.labels(i));
  }
  for (int i = 1; i <= m; ++i) {
    PolyMatrix mat = zero_matrix(f, nv, c.modules[i], c.modules[i - 1]);
    if (i == 1)
      put_d1(mat, sp, f, nv, 0);
    else
      put_d(mat, sp, f, nv, i, 0, 0);
    c.maps.push_back(std::move(mat));
  }
  return c;
}

ComplexRep rope_resolution(const Rope& rope, bool allow_degenerate) {
  check_desk(rope.n);
  if (!allow_degenerate && !rope.nondegenerate())
    fail(Errc::DegenerateRope, "B has a column of degree 0");
  const Field& f = rope.field;
  const int n = rope.n, m = n - 1, nv = rope.nvars();
  const std::size_t k = static_cast<std::size_t>(rope.k);
  Splitting sp(m);
  const KoszulBasis& kb = sp.basis();
  ComplexRep c;
  c.field = f;
  c.nvars = nv;
  c.name = "rope";
  c.modules.push_back({0});
  c.labels.push_back({"1"});
  std::vector<std::size_t> dsize(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> deg;
    std::vector<std::string> lab;
    if (i <= m) {
      dsize[i] = sp.level(i).elems.size();
      deg.assign(dsize[i], i + 1);
      lab = sp.labels(i);
    }
    for (const auto& T : kb.wedge(i - 1))
      for (std::size_t s = 0; s < k; ++s) {
        deg.push_back((i - 1) + rope.beta[s] + 1);
        lab.push_back(wedge_label(T) + "(x)f" + std::to_string(s));
      }
    c.modules.push_back(deg);
    c.labels.push_back(lab);
  }
  std::vector<std::vector<MultiPoly>> b(m, std::vector<MultiPoly>(k));
  for (int a = 0; a < m; ++a)
    for (std::size_t s = 0; s < k; ++s) b[a][s] = MultiPoly::from_hompoly(rope.B.entry(a, s), nv);

  for (int i = 1; i <= n; ++i) {
    PolyMatrix mat = zero_matrix(f, nv, c.modules[i], c.modules[i - 1]);
    const std::size_t qcol = dsize[i];
    if (i == 1) {
      put_d1(mat, sp, f, nv, 0);
      for (std::size_t s = 0; s < k; ++s) {
        MultiPoly mu(f, nv);
        for (int a = 0; a < m; ++a) mu += b[a][s] * xvar(f, nv, a);
        mat.e[0][qcol + s] = -mu;
      }
    } else {
      if (i <= m) put_d(mat, sp, f, nv, i, 0, 0);
      const Scalar sg(f, i % 2 == 0 ? 1 : -1);
      const auto& sets = kb.wedge(i - 1);
      for (std::size_t t = 0; t < sets.size(); ++t)
        for (std::size_t s = 0; s < k; ++s)
          for (int a = 0; a < m; ++a) {
            if (b[a][s].is_zero()) continue;
            for (auto [row, ps] : sp.project(sets[t], a))
              mat.e[row][qcol + t * k + s] += b[a][s].scaled(sg * Scalar(f, ps));
          }
      put_koszul_tensor(mat, kb, f, nv, i - 1, k, dsize[i - 1], qcol);
    }
    c.maps.push_back(std::move(mat));
  }
  return c;
}

ComplexRep struct_sheaf_resolution(const Rope& rope) {
  check_desk(rope.n);
  const Field& f = rope.field;
  const int m = rope.n - 1, nv = rope.nvars();
  KoszulBasis kb(m);
  std::vector<int> al{1};
  al.insert(al.end(), rope.alpha.begin(), rope.alpha.end());
  const std::size_t blocks = al.size();
  ComplexRep c;
  c.field = f;
  c.nvars = nv;
  c.name = "structure_sheaf";
  std::vector<std::size_t> w(m + 1);
  for (int j = 0; j <= m; ++j) {
    w[j] = kb.wedge(j).size();
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (std::size_t l = 0; l < blocks; ++l)
      for (const auto& T : kb.wedge(j)) {
        deg.push_back(j + 1 - al[l]);
        lab.push_back("[" + std::to_string(static_cast<long>(l) - 1) + "]" + wedge_label(T));
      }
    c.modules.push_back(deg);
    c.labels.push_back(lab);
  }
  for (int j = 1; j <= m; ++j) {
    PolyMatrix mat = zero_matrix(f, nv, c.modules[j], c.modules[j - 1]);
    for (std::size_t l = 0; l < blocks; ++l) put_koszul_tensor(mat, kb, f, nv, j, 1, l * w[j - 1], l * w[j]);
    const auto& sets = kb.wedge(j);
    for (std::size_t l = 1; l < blocks; ++l)
      for (std::size_t t = 0; t < sets.size(); ++t)
        for (std::size_t mm = 0; mm < sets[t].size(); ++mm) {
          const HomPoly& a = rope.A.entry(l - 1, sets[t][mm]);
          if (a.is_zero()) continue;
          std::size_t row = l * w[j - 1] + kb.index(erase_at(sets[t], mm));
          mat.e[row][t] -= MultiPoly::from_hompoly(a, nv).scaled(Scalar(f, koszul_sign(mm)));
        }
    c.maps.push_back(std::move(mat));
  }
  return c;
}

bool verify_grading(const ComplexRep& c) {
  if (c.maps.size() + 1 != c.modules.size() && !(c.maps.empty() && c.modules.size() <= 1)) return false;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const PolyMatrix& mat = c.maps[i];
    if (mat.src != c.modules[i + 1] || mat.tgt != c.modules[i]) return false;
    if (mat.e.size() != mat.tgt.size()) return false;
    for (std::size_t r = 0; r < mat.e.size(); ++r) {
      if (mat.e[r].size() != mat.src.size()) return false;
      for (std::size_t s = 0; s < mat.src.size(); ++s) {
        const MultiPoly& p = mat.e[r][s];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != mat.src[s] - mat.tgt[r]) return false;
      }
    }
  }
  return true;
}

bool verify_complex(const ComplexRep& c) {
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
    const PolyMatrix &lo = c.maps[i], &hi = c.maps[i + 1];
    if (lo.src.size() != hi.tgt.size()) return false;
    const std::size_t rows = lo.tgt.size(), mid = lo.src.size(), cols = hi.src.size();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t s = 0; s < cols; ++s) {
        MultiPoly acc(c.field, c.nvars);
        for (std::size_t j = 0; j < mid; ++j) {
          if (lo.e[r][j].is_zero() || hi.e[j][s].is_zero()) continue;
          acc += lo.e[r][j] * hi.e[j][s];
        }
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

bool is_minimal(const ComplexRep& c) {
  for (const auto& mat : c.maps)
    for (const auto& row : mat.e)
      for (const auto& p : row)
        for (const auto& [mono, coef] : p.terms())
          if (mono.degree() == 0) return false;
  return true;
}

ExactnessReport exactness_certificate(const ComplexRep& c, const std::function<long long(int)>& expected_hf,
                                      int d_lo, int d_hi, std::uint64_t seed) {
  ExactnessReport rep;
  const int nv = c.nvars;
  rep.euler_ok = true;
  for (int d = d_lo; d <= d_hi; ++d) {
    long long chi = 0;
    for (std::size_t i = 0; i < c.modules.size(); ++i)
      for (int a : c.modules[i]) chi += (i % 2 ? -1 : 1) * binom(d - a + nv - 1, nv - 1);
    if (chi != expected_hf(d)) {
      rep.euler_ok = false;
      rep.first_bad_degree = d;
      break;
    }
  }
  if (c.modules.empty()) {
    rep.rank_ok = true;
    return rep;
  }

  const detail::EvalField& F = eval_field(c.field);
  Rng rng(seed);
  rep.ranks.assign(c.maps.size(), 0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<std::uint64_t>> powers(nv);
    for (int v = 0; v < nv; ++v) {
      std::uint64_t x = rng.next() % F.size();
      powers[v].push_back(1);
      for (int e = 1; e < 64; ++e) powers[v].push_back(F.mul(powers[v].back(), x));
    }
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      const PolyMatrix& mat = c.maps[i];
      if (rep.ranks[i] == std::min(mat.tgt.size(), mat.src.size())) continue;
      std::vector<std::vector<std::uint64_t>> num(mat.tgt.size(), std::vector<std::uint64_t>(mat.src.size()));
      for (std::size_t r = 0; r < mat.tgt.size(); ++r)
        for (std::size_t s = 0; s < mat.src.size(); ++s) num[r][s] = eval_poly(mat.e[r][s], F, powers);
      rep.ranks[i] = std::max(rep.ranks[i], F.rank(std::move(num)));
    }
  }
  rep.rank_ok = true;
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    std::size_t in = i < c.maps.size() ? rep.ranks[i] : 0;
    std::size_t out = i >= 1 ? rep.ranks[i - 1] : 0;
    // the map into F_i is maps[i], the map out of F_i is maps[i-1]
    if (in + out != c.modules[i].size()) rep.rank_ok = false;
  }
  return rep;
}

bool verify_exactness_certificate(const ComplexRep& c, const std::function<long long(int)>& expected_hf, int d_lo,
                                  int d_hi, std::uint64_t seed) {
  return exactness_certificate(c, expected_hf, d_lo, d_hi, seed).ok();
}

std::vector<std::vector<int>> split_block(int n, int i) {
  const int m = n - 1;
  KoszulBasis kb(m);
  require(i >= 2 && i <= m, Errc::RangeError, "split block index out of range");
  const auto& sets = kb.wedge(i);
  // rows: discarded (T', j) ordered by U = T' u {j}; columns: U
  std::vector<std::vector<int>> blk(sets.size(), std::vector<int>(sets.size(), 0));
  for (std::size_t u = 0; u < sets.size(); ++u) {
    const auto& U = sets[u];
    for (std::size_t mm = 0; mm < U.size(); ++mm) {
      std::vector<int> rest = erase_at(U, mm);
      if (!rest.empty() && U[mm] <= rest.back()) continue;
      std::vector<int> whole = rest;
      whole.push_back(U[mm]);
      blk[kb.index(whole)][u] += koszul_sign(mm);
    }
  }
  return blk;
}

}  // namespace ropelab
