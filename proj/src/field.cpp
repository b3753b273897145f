#include "ropelab/field.hpp"

#include <ostream>

namespace ropelab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::AllZero: return "AllZero";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::InternalError: return "InternalError";
    case Errc::CodimTooSmall: return "CodimTooSmall";
    case Errc::ShapeError: return "ShapeError";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::DegenerateRope: return "DegenerateRope";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::CharMismatch: return "CharMismatch";
    case Errc::RangeError: return "RangeError";
    case Errc::ParseError: return "ParseError";
    case Errc::NotBlockForm: return "NotBlockForm";
  }
  return "Unknown";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field make_field(long long c) {
  if (c == 0) return Field(0);
  if (c < 0 || c >= (1LL << 31)) fail(Errc::RangeError, "characteristic out of range: " + std::to_string(c));
  if (!is_prime(c)) fail(Errc::NonPrimeCharacteristic, std::to_string(c) + " is not prime");
  return Field(static_cast<std::uint32_t>(c));
}

namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t mpz_mod_u(const mpz_class& z, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

}  // namespace

Scalar::Scalar(const Field& f, long long v) : p_(f.characteristic()) {
  if (p_) r_ = reduce(v, p_);
  else q_ = mpq_class(static_cast<long>(v));
}

Scalar::Scalar(const Field& f, const mpq_class& v) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = mpz_mod_u(v.get_den(), p_);
  if (den == 0) fail(Errc::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
  std::uint64_t num = mpz_mod_u(v.get_num(), p_);
  r_ = static_cast<std::uint32_t>(num * inv_mod(den, p_) % p_);
}

Field Scalar::field() const { return Field(p_); }

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_)
    fail(Errc::FieldMismatch, "char " + std::to_string(p_) + " vs char " + std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) s.r_ = r_ ? p_ - r_ : 0;
  else s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_) {
    std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_) r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p_ - o.r_);
  else q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_) r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
  else q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= scalar_inv(o); }

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

int Scalar::compare(const Scalar& o) const {
  check(o);
  if (p_) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
  return cmp(q_, o.q_);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

Scalar scalar_inv(const Scalar& x) {
  if (x.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Field f = x.field();
  if (f.is_rational()) return Scalar(f, mpq_class(1) / x.rational());
  return Scalar(f, static_cast<long long>(inv_mod(x.residue(), f.characteristic())));
}

Scalar scalar_pow(Scalar x, unsigned long e) {
  Scalar acc = Scalar::one(x.field());
  while (e) {
    if (e & 1) acc *= x;
    x *= x;
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar parse_scalar(const Field& f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) fail(Errc::ParseError, "bad scalar '" + text + "'");
  if (q.get_den() == 0) fail(Errc::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

}  // namespace ropelab
