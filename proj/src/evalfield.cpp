#include "evalfield.hpp"

#include <gmp.h>

namespace ropelab::detail {

namespace {

constexpr std::uint64_t kMersenne = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kMinSize = 1 << 14;

std::uint64_t mersenne_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kMersenne);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kMersenne) s -= kMersenne;
  return s;
}

// x * a in F_p[x]/(f), digits little endian, f monic of degree e with lower
// coefficients c.
std::uint64_t times_x(std::uint64_t a, const std::vector<std::uint64_t>& c, std::uint64_t p, unsigned e,
                      std::vector<std::uint64_t>& scratch) {
  for (unsigned i = 0; i < e; ++i) {
    scratch[i] = a % p;
    a /= p;
  }
  std::uint64_t h = scratch[e - 1];
  for (unsigned i = e - 1; i > 0; --i) scratch[i] = scratch[i - 1];
  scratch[0] = 0;
  std::uint64_t out = 0;
  for (unsigned i = e; i-- > 0;) {
    std::uint64_t d = (scratch[i] + (p - (h * c[i]) % p)) % p;
    out = out * p + d;
  }
  return out;
}

}  // namespace

EvalField::EvalField(const Field& base) {
  if (base.is_rational()) {
    p_ = q_ = kMersenne;
    mersenne_ = true;
    return;
  }
  p_ = base.characteristic();
  if (p_ >= kMinSize) {
    q_ = p_;
    return;
  }
  e_ = 1;
  q_ = p_;
  while (q_ < kMinSize) {
    q_ *= p_;
    ++e_;
  }
  tables_ = true;
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  std::vector<std::uint64_t> c(e_), scratch(e_);
  // search for a primitive polynomial: x must have order q - 1
  for (std::uint64_t code = 1; code < q_; ++code) {
    std::uint64_t v = code;
    for (unsigned i = 0; i < e_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    if (c[0] == 0) continue;
    std::uint64_t a = 1, m = 0;
    bool ok = true;
    exp_[0] = 1;
    for (m = 1; m < q_ - 1; ++m) {
      a = times_x(a, c, p_, e_, scratch);
      if (a == 1) {
        ok = false;
        break;
      }
      exp_[m] = static_cast<std::uint32_t>(a);
    }
    if (!ok) continue;
    if (times_x(a, c, p_, e_, scratch) != 1) continue;
    for (m = 0; m < q_ - 1; ++m) log_[exp_[m]] = static_cast<std::uint32_t>(m);
    return;
  }
  fail(Errc::InternalError, "no primitive polynomial found");
}

std::uint64_t EvalField::add(std::uint64_t a, std::uint64_t b) const {
  if (!tables_) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t EvalField::neg(std::uint64_t a) const {
  if (!tables_) return a ? p_ - a : 0;
  if (p_ == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t d = a % p_;
    out += (d ? p_ - d : 0) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t EvalField::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (mersenne_) return mersenne_mul(a, b);
  if (!tables_) return (a * b) % p_;
  std::uint64_t l = static_cast<std::uint64_t>(log_[a]) + log_[b];
  if (l >= q_ - 1) l -= q_ - 1;
  return exp_[l];
}

std::uint64_t EvalField::pow(std::uint64_t a, unsigned e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t EvalField::inv(std::uint64_t a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  std::uint64_t r = 1, b = a, e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t EvalField::embed(const Scalar& s) const {
  if (!mersenne_) return s.residue();
  std::uint64_t num = mpz_fdiv_ui(s.rational().get_num_mpz_t(), kMersenne);
  std::uint64_t den = mpz_fdiv_ui(s.rational().get_den_mpz_t(), kMersenne);
  require(den != 0, Errc::InternalError, "denominator vanishes at the evaluation prime");
  return mul(num, inv(den));
}

std::size_t EvalField::rank(std::vector<std::vector<std::uint64_t>> m) const {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = neg(mul(m[i][c], iv));
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = add(m[i][j], mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace ropelab::detail
