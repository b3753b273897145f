#pragma once

#include <string>
#include <vector>

#include "ropelab/field.hpp"

namespace ropelab {

// Homogeneous polynomial in t,u. coeffs[i] multiplies t^(deg-i) u^i.
// The zero polynomial has deg == -1 and no coefficients.
class HomPoly {
 public:
  HomPoly() = default;
  explicit HomPoly(Field f) : field_(f) {}
  HomPoly(Field f, int deg, std::vector<Scalar> coeffs);

  static HomPoly zero(Field f) { return HomPoly(f); }
  static HomPoly constant(const Scalar& c);
  static HomPoly monomial(const Scalar& c, int tdeg, int udeg);
  static HomPoly t(Field f) { return monomial(Scalar::one(f), 1, 0); }
  static HomPoly u(Field f) { return monomial(Scalar::one(f), 0, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return deg_ < 0; }
  int degree() const { return deg_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  // Coefficient of t^(deg-i) u^i; zero outside range.
  Scalar coeff(int i) const;

  HomPoly operator-() const;
  friend bool operator==(const HomPoly& a, const HomPoly& b);
  friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  Field field_;
  int deg_ = -1;
  std::vector<Scalar> c_;
};

HomPoly hp_add(const HomPoly& f, const HomPoly& g);
HomPoly hp_sub(const HomPoly& f, const HomPoly& g);
HomPoly hp_mul(const HomPoly& f, const HomPoly& g);
HomPoly hp_scale(const HomPoly& f, const Scalar& c);
HomPoly hp_pow(const HomPoly& f, unsigned e);
// Exact quotient f/g; throws InternalError on a nonzero remainder.
HomPoly hp_divexact(const HomPoly& f, const HomPoly& g);
bool hp_divides(const HomPoly& g, const HomPoly& f);
HomPoly hp_gcd(const std::vector<HomPoly>& fs);
Scalar hp_eval(const HomPoly& f, const Scalar& t0, const Scalar& u0);
// Scales so the lowest u-power coefficient is 1.
HomPoly hp_monic(const HomPoly& f);

inline HomPoly operator+(const HomPoly& a, const HomPoly& b) { return hp_add(a, b); }
inline HomPoly operator-(const HomPoly& a, const HomPoly& b) { return hp_sub(a, b); }
inline HomPoly operator*(const HomPoly& a, const HomPoly& b) { return hp_mul(a, b); }
inline HomPoly operator*(const Scalar& c, const HomPoly& a) { return hp_scale(a, c); }

// Parses text like "t^2 - 3/2*t*u + u^2" or "0".
HomPoly parse_hompoly(const Field& f, const std::string& text);

}  // namespace ropelab
