#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ropelab/error.hpp"

namespace ropelab {

// Characteristic 0 means Q; otherwise F_p with p < 2^31.
class Field {
 public:
  Field() = default;
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
  friend Field make_field(long long characteristic);
  friend class Scalar;
};

Field make_field(long long characteristic);
bool is_prime(long long n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long long v);
  Scalar(const Field& f, const mpq_class& v);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  Field field() const;
  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  // Only meaningful in the matching characteristic.
  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used only for deterministic tie breaking.
  int compare(const Scalar& o) const;

  std::string str() const;

 private:
  void check(const Scalar& o) const;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  mpq_class q_;
};

Scalar scalar_inv(const Scalar& x);
Scalar scalar_pow(Scalar x, unsigned long e);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Parses "a", "-a", "a/b" (rationals) or an integer residue.
Scalar parse_scalar(const Field& f, const std::string& text);

}  // namespace ropelab
