#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ropelab/hpoly.hpp"

namespace ropelab {

constexpr int kMaxVars = 16;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  int degree() const;
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Degree first, then reverse lexicographic with variable 0 largest.
struct DegRevLex {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Polynomial in x_0..x_r, t, u; t and u are the last two variables.
class MultiPoly {
 public:
  using Terms = std::map<Mono, Scalar, DegRevLex>;

  MultiPoly() = default;
  MultiPoly(Field f, int nvars);

  static MultiPoly var(const Field& f, int nvars, int i);
  static MultiPoly constant(const Scalar& c, int nvars);
  // Embeds a polynomial in t,u.
  static MultiPoly from_hompoly(const HomPoly& p, int nvars);

  const Field& field() const { return f_; }
  int nvars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  // -1 for zero; throws ShapeError if not homogeneous
  int degree() const;
  bool is_homogeneous() const;
  // True when the polynomial is a nonzero constant.
  bool is_unit() const;

  void add_term(const Mono& m, const Scalar& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Scalar& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Scalar eval(const std::vector<Scalar>& point) const;
  std::string str() const;

 private:
  void check(const MultiPoly& o) const;
  Field f_;
  int nv_ = 0;
  Terms terms_;
};

std::string var_name(int nvars, int i);

}  // namespace ropelab
