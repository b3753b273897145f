#include "ropelab/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ropelab/error.hpp"
#include "ropelab/normal.hpp"

namespace ropelab {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

long long pair_sum(const std::vector<int>& v) {
  long long s = 0;
  for (int a : v)
    for (int b : v) s += binom1(a - b + 1);
  return s;
}

void check_sorted(const std::vector<int>& v, int min_entry, const char* what) {
  if (!std::is_sorted(v.begin(), v.end())) fail(Errc::ShapeError, std::string(what) + " must be ascending");
  if (!v.empty() && v.front() < min_entry) fail(Errc::ShapeError, std::string(what) + " has an entry below the minimum");
}

std::vector<int> balanced(int sum, int parts) {
  const int p = sum / parts, s = sum % parts;
  std::vector<int> v(parts - s, p);
  v.insert(v.end(), s, p + 1);
  return v;
}

void gen_partitions(int left, int parts, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int x = lo; x * parts <= left; ++x) {
    cur.push_back(x);
    gen_partitions(left - x, parts - 1, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int TypeVector::sum() const { return total(v); }

std::string TypeVector::str() const {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ")";
  return o.str();
}

long long dim_V_alpha(int n, const std::vector<int>& alpha) {
  const int m = static_cast<int>(alpha.size());
  if (n < 3 || m < 1 || m > n - 2) fail(Errc::ShapeError, "right type needs 1..n-2 entries");
  check_sorted(alpha, 1, "right type");
  const int k = n - 1 - m, g = -total(alpha);
  return static_cast<long long>(n - 1) * (n - k + 1 - g) - pair_sum(alpha);
}

long long dim_W_beta(int n, const std::vector<int>& beta) {
  const int k = static_cast<int>(beta.size());
  if (n < 3 || k < 1 || k > n - 2) fail(Errc::ShapeError, "left type needs 1..n-2 entries");
  check_sorted(beta, 0, "left type");
  const int g = -total(beta);
  return static_cast<long long>(n - 1) * (k + 2 - g) - pair_sum(beta);
}

std::pair<TypeVector, TypeVector> minimal_types(int n, int k, int g) {
  const int m = n - 1 - k;
  if (n < 3 || k < 1 || m < 1) fail(Errc::PreconditionViolated, "need 1 <= k <= n-2");
  if (g > -k) fail(Errc::PreconditionViolated, "a nondegenerate rope needs g <= -k");
  if (-g < m) fail(Errc::PreconditionViolated, "every row degree must be positive, so -g >= n-1-k");
  return {TypeVector{TypeVector::Right, balanced(-g, m)}, TypeVector{TypeVector::Left, balanced(-g, k)}};
}

std::vector<std::vector<int>> partitions(int total_sum, int parts, int min_part) {
  std::vector<std::vector<int>> out;
  if (parts < 0 || total_sum < 0) return out;
  std::vector<int> cur;
  gen_partitions(total_sum, parts, min_part, cur, out);
  return out;
}

int rao_from_types(const std::vector<int>& alpha, const std::vector<int>& beta, int g, int z) {
  int s = 0;
  if (z <= 0) {
    for (int a : alpha) s += binom1(z + a);
    return s;
  }
  s = -static_cast<int>(beta.size()) * z - g;
  for (int b : beta) s += binom1(z - b);
  return s;
}

bool rho_min_dominates(int n, int k, int g, int z_lo, int z_hi, int max_minus_g) {
  if (-g > max_minus_g) fail(Errc::SizeLimit, "partition enumeration capped at -g <= " + std::to_string(max_minus_g));
  auto [amin, bmin] = minimal_types(n, k, g);
  const int m = n - 1 - k;
  // left types may contain zeros: degenerate ropes have the same genus
  const auto rights = partitions(-g, m, 1);
  const auto lefts = partitions(-g, k, 0);
  for (int z = z_lo; z <= z_hi; ++z) {
    const int lo = rao_from_types(amin.v, bmin.v, g, z);
    if (z <= 0) {
      for (const auto& a : rights)
        if (rao_from_types(a, bmin.v, g, z) < lo) return false;
    } else {
      for (const auto& b : lefts)
        if (rao_from_types(amin.v, b, g, z) < lo) return false;
    }
  }
  return true;
}

long long component_dim(int n, int d, int g) {
  if (n < 3 || d < 2 || d > n - 1) fail(Errc::PreconditionViolated, "need 2 <= d <= n-1");
  if (g > -(d - 1)) fail(Errc::PreconditionViolated, "need g <= -(d-1)");
  if (d == 2 && g == -1) return 4LL * (n - 1);
  const long long k = n - d;
  const long long v = static_cast<long long>(n - 1) * (k + 2 - g) - k * k;
  if (d == 2 && v != static_cast<long long>(n - 1) * (3 - g) - 1)
    fail(Errc::InternalError, "double-line dimension identity failed");
  return v;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    default:
      return "unknown";
  }
}

const char* member_name(Classification::Member m) {
  switch (m) {
    case Classification::SkewLines:
      return "skew-lines";
    case Classification::Rope:
      return "rope";
    default:
      return "unknown";
  }
}

Classification classify(int n, int d, int g, long long characteristic) {
  Classification c;
  c.component_dim = component_dim(n, d, g);
  if (d == 2) {
    c.dim_exact = true;
    if (g == -1) {
      c.generically_smooth = Tri::True;
      c.nonreduced = Tri::False;
      c.general_member = Classification::SkewLines;
      return c;
    }
    const bool smooth = characteristic != 2 || g == -2;
    c.generically_smooth = smooth ? Tri::True : Tri::False;
    c.nonreduced = (characteristic == 2 && g <= -3) ? Tri::True : Tri::False;
    c.general_member = Classification::Rope;
    return c;
  }
  c.strict_gate = g <= std::min(-3 * (d - 1), d - n);
  c.either_gate = g <= d - n && (g <= -3 * (d - 1) || -g == 2 * (d - 1));
  if (c.either_gate) {
    c.dim_exact = true;
    c.generically_smooth = Tri::True;
    c.nonreduced = Tri::False;
    c.general_member = Classification::Rope;
  }
  return c;
}

Tri is_obstructed(const Rope& c, long long characteristic) {
  if (static_cast<long long>(c.field.characteristic()) != characteristic)
    fail(Errc::CharMismatch, "rope is defined over another characteristic");
  const int d = c.degree();
  if (d < 2 || d > c.n - 1 || c.genus > -(d - 1)) return Tri::Unknown;
  Classification cl = classify(c.n, d, c.genus, characteristic);
  if (!cl.dim_exact) return Tri::Unknown;
  return h0_normal(c).h0 > cl.component_dim ? Tri::True : Tri::False;
}

std::vector<MultiPoly> gin_ideal(const Rope& c) {
  if (!c.nondegenerate()) fail(Errc::DegenerateRope, "generic initial ideal is listed for nondegenerate ropes");
  const int nv = c.nvars();
  const Scalar one = Scalar::one(c.field);
  std::vector<MultiPoly> out;
  for (int i = 0; i <= c.r; ++i)
    for (int j = i; j <= c.r; ++j) {
      Mono m;
      m.e[i] += 1;
      m.e[j] += 1;
      MultiPoly p(c.field, nv);
      p.add_term(m, one);
      out.push_back(p);
    }
  for (int j = 1; j <= c.k; ++j) {
    Mono m;
    m.e[j - 1] = 1;
    m.e[c.r + 1] = static_cast<std::uint8_t>(c.beta[j - 1]);
    MultiPoly p(c.field, nv);
    p.add_term(m, one);
    out.push_back(p);
  }
  return out;
}

namespace {

struct Range {
  int pick = 0;  // 1: A~0 alone, 2: A' blocks, 3: A'' and A' blocks
  int i = 0, j = 0;
};

Range locate(int p, int s, int w, int r) {
  if (p < 1 || w < 1 || s < 0) fail(Errc::RangeError, "need p >= 1, w >= 1, s >= 0");
  const int m = s + w;
  if (r < m || r > m * (p + 1) + s - 1) fail(Errc::RangeError, "need s+w <= r <= (s+w)(p+1)+s-1");
  Range g;
  if (r == m) {
    g.pick = 1;
  } else if (r <= m + s * (p + 1)) {
    g.pick = 2;
    const int q = r - m;
    g.j = (q - 1) / (p + 1);
    g.i = q - g.j * (p + 1);
  } else {
    g.pick = 3;
    const int q = r - (s * (p + 2) + w);
    g.j = (q - 1) / p;
    g.i = q - g.j * p;
  }
  return g;
}

}  // namespace

bool staircase_has_zero_column(int p, int s, int w, int r) {
  Range g = locate(p, s, w, r);
  return g.pick == 3 && g.j == w - 1;
}

std::vector<StaircaseBlock> staircase_layout(int p, int s, int w, int r, bool repair) {
  Range g = locate(p, s, w, r);
  const int m = s + w;
  auto tilde = [&](int del) { return StaircaseBlock{"A~" + std::to_string(del), m - del, m - del + 1}; };
  auto prime = [](int i) { return StaircaseBlock{"A'" + std::to_string(i), 1, i + 1}; };
  auto second = [](int i) { return StaircaseBlock{"A''" + std::to_string(i), 1, i + 1}; };
  std::vector<StaircaseBlock> out;
  if (g.pick == 1) {
    out.push_back(tilde(0));
  } else if (g.pick == 2) {
    out.push_back(tilde(g.j + 1));
    out.push_back(prime(g.i));
    for (int x = 0; x < g.j; ++x) out.push_back(prime(p + 1));
  } else {
    const bool empty = g.j == w - 1;
    if (empty && repair) {
      out.push_back(second(g.i + 1));
    } else {
      out.push_back(tilde(g.j + s + 1));
      out.push_back(second(g.i));
    }
    for (int x = 0; x < g.j; ++x) out.push_back(second(p));
    for (int x = 0; x < s; ++x) out.push_back(prime(p + 1));
  }
  int rows = 0, cols = 0;
  for (const auto& b : out) {
    if (b.rows < 0 || b.cols < 1) fail(Errc::InternalError, "block " + b.name + " has a negative shape");
    rows += b.rows;
    cols += b.cols;
  }
  if (rows != m) fail(Errc::InternalError, "staircase rows do not add up to s+w");
  if (cols != r + 1) fail(Errc::InternalError, "staircase columns do not add up to r+1");
  return out;
}

GradedMap staircase_matrix(int p, int s, int w, int r, const Field& f, bool repair) {
  const auto layout = staircase_layout(p, s, w, r, repair);
  const int m = s + w;
  const Scalar one = Scalar::one(f);
  std::vector<std::vector<HomPoly>> e(m, std::vector<HomPoly>(r + 1, HomPoly::zero(f)));
  int row = 0, col = 0;
  for (const auto& b : layout) {
    if (b.name[1] == '~') {
      for (int i = 0; i < b.rows; ++i) {
        const int deg = i < w ? p : p + 1;
        e[row + i][col + i] = HomPoly::monomial(one, deg, 0);
        e[row + i][col + i + 1] = HomPoly::monomial(one, 0, deg);
      }
    } else {
      const int deg = b.name[1] == '\'' && b.name[2] != '\'' ? p + 1 : p;
      const int len = b.cols - 1;
      for (int x = 0; x < len; ++x) e[row][col + x] = HomPoly::monomial(one, deg - x, x);
      e[row][col + len] = HomPoly::monomial(one, 0, deg);
    }
    row += b.rows;
    col += b.cols;
  }
  return make_A(f, e);
}

}  // namespace ropelab
