#include "ropelab/multipoly.hpp"

#include <sstream>

namespace ropelab {

int Mono::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool DegRevLex::operator()(const Mono& a, const Mono& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

MultiPoly::MultiPoly(Field f, int nvars) : f_(f), nv_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) fail(Errc::SizeLimit, "too many variables");
}

MultiPoly MultiPoly::var(const Field& f, int nvars, int i) {
  MultiPoly p(f, nvars);
  Mono m;
  m.e[i] = 1;
  p.terms_.emplace(m, Scalar::one(f));
  return p;
}

MultiPoly MultiPoly::constant(const Scalar& c, int nvars) {
  MultiPoly p(c.field(), nvars);
  if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
  return p;
}

MultiPoly MultiPoly::from_hompoly(const HomPoly& h, int nvars) {
  MultiPoly p(h.field(), nvars);
  for (int i = 0; i <= h.degree(); ++i) {
    if (h.coeffs()[i].is_zero()) continue;
    Mono m;
    m.e[nvars - 2] = static_cast<std::uint8_t>(h.degree() - i);
    m.e[nvars - 1] = static_cast<std::uint8_t>(i);
    p.terms_.emplace(m, h.coeffs()[i]);
  }
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) fail(Errc::ShapeError, "polynomial is not homogeneous");
  return terms_.begin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool MultiPoly::is_unit() const { return terms_.size() == 1 && terms_.begin()->first.degree() == 0; }

void MultiPoly::check(const MultiPoly& o) const {
  if (f_ != o.f_) fail(Errc::FieldMismatch, "polynomials over different fields");
  if (nv_ != o.nv_) fail(Errc::ShapeError, "polynomials in different rings");
}

void MultiPoly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& kv : p.terms_) kv.second = -kv.second;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check(b);
  MultiPoly p(a.f_, a.nv_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
      p.add_term(m, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly p(f_, nv_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& pt) const {
  if (static_cast<int>(pt.size()) != nv_) fail(Errc::ShapeError, "evaluation point has wrong length");
  Scalar acc = Scalar::zero(f_);
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < nv_; ++i)
      if (m.e[i]) term *= scalar_pow(pt[i], m.e[i]);
    acc += term;
  }
  return acc;
}

std::string var_name(int nvars, int i) {
  if (i == nvars - 2) return "t";
  if (i == nvars - 1) return "u";
  return "x" + std::to_string(i);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // largest monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = f_.is_rational() && sgn(c.rational()) < 0;
    const std::string cs = neg ? (-c).str() : c.str();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string mono;
    for (int i = 0; i < nv_; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(nv_, i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) os << cs;
    else if (cs == "1") os << mono;
    else os << cs << "*" << mono;
  }
  return os.str();
}

}  // namespace ropelab
