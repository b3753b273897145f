#include "ropelab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "sparse_echelon.hpp"

namespace ropelab {

using detail::ExactOps;
using detail::ModOps;
using detail::SparseEchelon;

namespace {

constexpr std::uint64_t kLiftPrime = (1ULL << 61) - 1;

thread_local KernelStats g_stats;

std::vector<std::size_t> sparsest_first(const LinearSystem& sys) {
  std::vector<std::size_t> order(sys.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sys.rows[a].size() < sys.rows[b].size(); });
  return order;
}

bool to_mod(const Scalar& s, std::uint64_t p, std::uint64_t& out) {
  const mpq_class& q = s.rational();
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return false;
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  out = detail::mulmod(num, detail::powmod(den, p - 2, p), p);
  return true;
}

// Wang's rational reconstruction with symmetric bounds.
bool rational_reconstruct(std::uint64_t a, std::uint64_t m, mpq_class& out) {
  const std::uint64_t bound = 1518500249ULL;  // floor(sqrt((2^61-1)/2))
  __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 > static_cast<__int128>(bound)) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 den = s1, num = r1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den == 0 || den > static_cast<__int128>(bound)) return false;
  mpz_class n(std::to_string(static_cast<long long>(num)));
  mpz_class d(std::to_string(static_cast<long long>(den)));
  if (gcd(n, d) != 1) return false;
  out = mpq_class(n, d);
  return true;
}

Kernel exact_kernel(const LinearSystem& sys) {
  SparseEchelon<ExactOps> ech(ExactOps{sys.field}, sys.ncols);
  for (std::size_t i : sparsest_first(sys)) {
    SparseEchelon<ExactOps>::Row r;
    r.reserve(sys.rows[i].size());
    for (const auto& [c, v] : sys.rows[i]) r.emplace_back(static_cast<std::uint32_t>(c), v);
    ech.insert(r);
    if (ech.rank() == sys.ncols) break;
  }
  Kernel k;
  ech.kernel(k.free_cols, k.basis);
  return k;
}

bool modular_kernel(const LinearSystem& sys, std::uint64_t p, std::vector<std::size_t>& free_cols,
                    std::vector<std::vector<std::uint64_t>>& basis) {
  SparseEchelon<ModOps> ech(ModOps{p}, sys.ncols);
  const bool rational = sys.field.is_rational();
  for (std::size_t i : sparsest_first(sys)) {
    SparseEchelon<ModOps>::Row r;
    r.reserve(sys.rows[i].size());
    for (const auto& [c, v] : sys.rows[i]) {
      std::uint64_t x;
      if (rational) {
        if (!to_mod(v, p, x)) return false;
      } else {
        x = v.residue();
      }
      r.emplace_back(static_cast<std::uint32_t>(c), x);
    }
    ech.insert(r);
    if (ech.rank() == sys.ncols) break;
  }
  ech.kernel(free_cols, basis);
  return true;
}

bool verify(const LinearSystem& sys, const std::vector<Vec>& basis) {
  for (const auto& row : sys.rows)
    for (const auto& v : basis) {
      mpq_class acc = 0;
      for (const auto& [c, a] : row)
        if (!v[c].is_zero()) acc += a.rational() * v[c].rational();
      if (sgn(acc) != 0) return false;
    }
  return true;
}

}  // namespace

void LinearSystem::add_row(SparseRow row) {
  for (const auto& e : row)
    if (e.first >= ncols) fail(Errc::InternalError, "column index out of range");
  rows.push_back(std::move(row));
}

void LinearSystem::add_dense_row(const Vec& row) {
  SparseRow r;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) r.emplace_back(c, row[c]);
  add_row(std::move(r));
}

Kernel kernel(const LinearSystem& sys) {
  g_stats = KernelStats{};
  Kernel k;
  for (const auto& row : sys.rows)
    for (const auto& e : row)
      if (e.second.characteristic() != sys.field.characteristic())
        fail(Errc::FieldMismatch, "system entry in wrong field");
  if (!sys.field.is_rational()) {
    std::vector<std::vector<std::uint64_t>> mb;
    modular_kernel(sys, sys.field.characteristic(), k.free_cols, mb);
    k.basis.reserve(mb.size());
    for (auto& v : mb) {
      Vec sv;
      sv.reserve(v.size());
      for (auto x : v) sv.emplace_back(sys.field, static_cast<long long>(x));
      k.basis.push_back(std::move(sv));
    }
    return k;
  }
  g_stats.modular_path = true;
  std::vector<std::vector<std::uint64_t>> mb;
  if (modular_kernel(sys, kLiftPrime, k.free_cols, mb)) {
    bool ok = true;
    k.basis.reserve(mb.size());
    for (auto& v : mb) {
      Vec sv;
      sv.reserve(v.size());
      for (auto x : v) {
        mpq_class q;
        if (!rational_reconstruct(x, kLiftPrime, q)) {
          ok = false;
          break;
        }
        sv.emplace_back(sys.field, q);
      }
      if (!ok) break;
      k.basis.push_back(std::move(sv));
    }
    // rank over Q is at least the rank mod p, so verified vectors are the whole kernel
    if (ok && verify(sys, k.basis)) return k;
  }
  g_stats.fell_back = true;
  return exact_kernel(sys);
}

std::size_t rank(const LinearSystem& sys) {
  if (!sys.field.is_rational() || sys.ncols <= sys.rows.size()) return sys.ncols - kernel(sys).nullity();
  // wide system: work with the transpose
  LinearSystem t(sys.field, sys.rows.size());
  std::vector<SparseRow> cols(sys.ncols);
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    for (const auto& [c, v] : sys.rows[i]) cols[c].emplace_back(i, v);
  for (auto& c : cols) t.rows.push_back(std::move(c));
  return t.ncols - kernel(t).nullity();
}

std::size_t rank_of_rows(const Field& f, std::size_t ncols, const std::vector<Vec>& rows) {
  LinearSystem sys(f, ncols);
  for (const auto& r : rows) sys.add_dense_row(r);
  return rank(sys);
}

Kernel kernel_of_rows(const Field& f, std::size_t ncols, const std::vector<Vec>& rows) {
  LinearSystem sys(f, ncols);
  for (const auto& r : rows) sys.add_dense_row(r);
  return kernel(sys);
}

KernelStats last_kernel_stats() { return g_stats; }

struct RowSpace::Impl {
  explicit Impl(Field f, std::size_t n) : ech(ExactOps{f}, n) {}
  SparseEchelon<ExactOps> ech;
};

RowSpace::RowSpace(Field f, std::size_t ncols) : impl_(std::make_unique<Impl>(f, ncols)), ncols_(ncols) {}
RowSpace::~RowSpace() = default;
RowSpace::RowSpace(RowSpace&&) noexcept = default;
RowSpace& RowSpace::operator=(RowSpace&&) noexcept = default;

namespace {
SparseEchelon<ExactOps>::Row to_row(const Vec& v, std::size_t n) {
  if (v.size() != n) fail(Errc::ShapeError, "vector length mismatch");
  SparseEchelon<ExactOps>::Row r;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) r.emplace_back(static_cast<std::uint32_t>(c), v[c]);
  return r;
}
}  // namespace

bool RowSpace::insert(const Vec& v) { return impl_->ech.insert(to_row(v, ncols_)); }
bool RowSpace::contains(const Vec& v) const { return !impl_->ech.independent(to_row(v, ncols_)); }
std::size_t RowSpace::rank() const { return impl_->ech.rank(); }

}  // namespace ropelab
